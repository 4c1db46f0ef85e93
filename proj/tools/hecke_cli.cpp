#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "shifted_hecke/json_io.hpp"
#include "shifted_hecke/shifted_hecke.hpp"

namespace sh = shifted_hecke;
using nlohmann::json;

namespace {

std::vector<int> parse_csv(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

sh::WordMode make_mode(const std::string& mode, const std::vector<int>& target) {
  if (mode == "plain") return sh::WordMode::plain(sh::Permutation(target));
  if (mode == "o")
    return sh::WordMode::orthogonal(sh::Involution(sh::Permutation(target)));
  if (mode == "sp")
    return sh::WordMode::symplectic(sh::FpfInvolution(target));
  throw sh::ValidationError("BadMode", "mode must be plain, o or sp");
}

sh::Relation parse_relation(const std::string& name) {
  static const std::map<std::string, sh::Relation> names = {
      {"braid", sh::Relation::braid},
      {"hecke-braid", sh::Relation::hecke_braid},
      {"o-reduced", sh::Relation::ortho_reduced},
      {"o-hecke", sh::Relation::ortho_hecke},
      {"sp-reduced", sh::Relation::sp_reduced},
      {"sp-hecke", sh::Relation::sp_hecke},
      {"ck", sh::Relation::ck},
      {"k-knuth", sh::Relation::k_knuth},
      {"sp-ck", sh::Relation::sp_ck},
      {"sp-kknuth", sh::Relation::sp_k_knuth},
      {"o-ck", sh::Relation::ortho_ck},
      {"o-kknuth", sh::Relation::ortho_k_knuth},
  };
  auto it = names.find(name);
  if (it == names.end())
    throw sh::ValidationError("BadRelation", "unknown relation " + name);
  return it->second;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw sh::ValidationError("BadFile", "cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symplectic and orthogonal Hecke insertion on shifted tableaux"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ----- insert
  auto* cmd_insert = app.add_subcommand("insert", "insert a word, print P and Q");
  {
    auto mode = std::make_shared<std::string>("sp");
    auto word = std::make_shared<std::string>();
    auto fac = std::make_shared<std::string>();
    auto trace = std::make_shared<bool>(false);
    auto pretty = std::make_shared<bool>(false);
    cmd_insert->add_option("--mode", *mode, "sp or o")->check(CLI::IsMember({"sp", "o"}));
    cmd_insert->add_option("--word", *word, "comma-separated letters")->required();
    cmd_insert->add_option("--factorization", *fac,
                           "weakly increasing labels, strict at descents");
    cmd_insert->add_flag("--trace", *trace, "record every forward transition");
    cmd_insert->add_flag("--pretty", *pretty, "render tableaux instead of JSON");
    cmd_insert->callback([=, &action]() {
      action = [=]() {
        sh::InsertionMode m = *mode == "sp" ? sh::InsertionMode::sp
                                            : sh::InsertionMode::o;
        sh::Word w = parse_csv(*word);
        auto pq = sh::p_and_q(w, m);
        if (*pretty) {
          std::cout << "P:\n" << sh::render(pq.p) << "Q:\n" << sh::render(pq.q);
          if (!fac->empty())
            std::cout << "Q(w,i):\n"
                      << sh::render(sh::semistandard_record(w, parse_csv(*fac), m));
          return 0;
        }
        json out{{"mode", *mode}, {"word", w}};
        out["p"] = sh::to_json(pq.p);
        out["q"] = sh::to_json(pq.q);
        if (!fac->empty())
          out["q_semistandard"] =
              sh::to_json(sh::semistandard_record(w, parse_csv(*fac), m));
        if (*trace) {
          json steps = json::array();
          sh::Word work = m == sh::InsertionMode::sp ? w : sh::scale2(w);
          sh::Tableau t;
          for (int a : work) {
            sh::InsertionState state{t, sh::Outer{true, 1, a}};
            while (!state.terminal()) {
              auto [step, next] = sh::forward_step(state);
              steps.push_back(
                  json{{"label", json::array({step.pos.row, step.pos.col})},
                       {"kind", sh::to_string(step.kind)},
                       {"state", sh::to_json(next)}});
              state = std::move(next);
            }
            t = state.base;
          }
          out["trace"] = steps;
        }
        emit(out);
        return 0;
      };
    });
  }

  // ----- uninsert
  auto* cmd_uninsert = app.add_subcommand("uninsert", "recover the word of (P, Q)");
  {
    auto mode = std::make_shared<std::string>("sp");
    auto pfile = std::make_shared<std::string>();
    auto qfile = std::make_shared<std::string>();
    auto pretty = std::make_shared<bool>(false);
    cmd_uninsert->add_option("--mode", *mode)->check(CLI::IsMember({"sp", "o"}));
    cmd_uninsert->add_option("--p", *pfile, "insertion tableau JSON file")->required();
    cmd_uninsert->add_option("--q", *qfile, "recording tableau JSON file")->required();
    cmd_uninsert->add_flag("--pretty", *pretty);
    cmd_uninsert->callback([=, &action]() {
      action = [=]() {
        sh::InsertionMode m = *mode == "sp" ? sh::InsertionMode::sp
                                            : sh::InsertionMode::o;
        sh::Tableau p = sh::tableau_from_json(load_json(*pfile));
        sh::SetValuedTableau q = sh::setvalued_from_json(load_json(*qfile));
        sh::Word w = sh::reconstruct_word(p, q, m);
        if (*pretty) {
          std::cout << "word:";
          for (int x : w) std::cout << " " << x;
          std::cout << "\n";
          return 0;
        }
        emit(json{{"mode", *mode}, {"word", w}});
        return 0;
      };
    });
  }

  // ----- words
  auto* cmd_words = app.add_subcommand("words", "enumerate member words");
  {
    auto mode = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto max_len = std::make_shared<int>(8);
    cmd_words->add_option("--mode", *mode)->required()->check(CLI::IsMember({"sp", "o", "plain"}));
    cmd_words->add_option("--target", *target, "one-line notation")->required();
    cmd_words->add_option("--max-len", *max_len);
    cmd_words->callback([=, &action]() {
      action = [=]() {
        sh::WordMode wm = make_mode(*mode, parse_csv(*target));
        auto words = sh::enumerate_words(wm, *max_len);
        emit(json{{"mode", *mode},
                  {"target", parse_csv(*target)},
                  {"max_len", *max_len},
                  {"words", sh::to_json(words)}});
        return 0;
      };
    });
  }

  // ----- atoms
  auto* cmd_atoms = app.add_subcommand("atoms", "atoms or Hecke atoms of a target");
  {
    auto mode = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto hecke = std::make_shared<bool>(false);
    cmd_atoms->add_option("--mode", *mode)->required()->check(CLI::IsMember({"sp", "o"}));
    cmd_atoms->add_option("--target", *target)->required();
    cmd_atoms->add_flag("--hecke", *hecke, "Hecke atoms instead of atoms");
    cmd_atoms->callback([=, &action]() {
      action = [=]() {
        sh::WordMode wm = make_mode(*mode, parse_csv(*target));
        auto set = *hecke ? sh::hecke_atoms(wm) : sh::atoms(wm);
        json arr = json::array();
        for (auto& p : set) arr.push_back(sh::to_json(p));
        emit(json{{"mode", *mode},
                  {"target", parse_csv(*target)},
                  {"hecke", *hecke},
                  {"atoms", arr}});
        return 0;
      };
    });
  }

  // ----- classes
  auto* cmd_classes = app.add_subcommand("classes", "bounded congruence closure");
  {
    auto rel = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto len_cap = std::make_shared<int>(8);
    auto alpha_cap = std::make_shared<int>(9);
    cmd_classes->add_option("--rel", *rel, "relation name, e.g. sp-kknuth")->required();
    cmd_classes->add_option("--word", *word)->required();
    cmd_classes->add_option("--len-cap", *len_cap);
    cmd_classes->add_option("--alpha-cap", *alpha_cap);
    cmd_classes->callback([=, &action]() {
      action = [=]() {
        auto cls = sh::congruence_class(parse_csv(*word), parse_relation(*rel),
                                        *len_cap, *alpha_cap);
        emit(json{{"relation", *rel},
                  {"word", parse_csv(*word)},
                  {"len_cap", *len_cap},
                  {"alpha_cap", *alpha_cap},
                  {"words", sh::to_json(cls)}});
        return 0;
      };
    });
  }

  // ----- expand
  auto* cmd_expand = app.add_subcommand("expand", "verify the tableau-basis expansion");
  {
    auto mode = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto vars = std::make_shared<int>(3);
    auto deg = std::make_shared<int>(6);
    cmd_expand->add_option("--mode", *mode)->required()->check(CLI::IsMember({"sp", "o", "plain"}));
    cmd_expand->add_option("--target", *target)->required();
    cmd_expand->add_option("--vars", *vars);
    cmd_expand->add_option("--deg", *deg);
    cmd_expand->callback([=, &action]() {
      action = [=]() {
        auto report = sh::verify_expansion(make_mode(*mode, parse_csv(*target)),
                                           *vars, *deg);
        emit(sh::to_json(report));
        return report.verified ? 0 : 4;
      };
    });
  }

  // ----- verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "expansion plus star-symmetry checks for one target");
  {
    auto mode = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto vars = std::make_shared<int>(3);
    auto deg = std::make_shared<int>(6);
    cmd_verify->add_option("--mode", *mode)->required()->check(CLI::IsMember({"sp", "o", "plain"}));
    cmd_verify->add_option("--target", *target)->required();
    cmd_verify->add_option("--vars", *vars);
    cmd_verify->add_option("--deg", *deg);
    cmd_verify->callback([=, &action]() {
      action = [=]() {
        sh::WordMode wm = make_mode(*mode, parse_csv(*target));
        auto report = sh::verify_expansion(wm, *vars, *deg);
        json out{{"expansion", sh::to_json(report)}};
        bool ok = report.verified;
        if (*mode != "plain") {
          bool star = sh::star_symmetry_check(wm, *vars, *deg);
          out["star_symmetric"] = star;
          ok = ok && star;
        }
        emit(out);
        return ok ? 0 : 4;
      };
    });
  }

  // ----- scan
  auto* cmd_scan = app.add_subcommand("scan", "search for conjecture counterexamples");
  {
    auto which = std::make_shared<std::string>();
    auto len_cap = std::make_shared<int>(5);
    auto alpha_cap = std::make_shared<int>(5);
    cmd_scan->add_option("--conjecture", *which)->required()->check(CLI::IsMember({"sp", "o"}));
    cmd_scan->add_option("--len-cap", *len_cap);
    cmd_scan->add_option("--alpha-cap", *alpha_cap);
    cmd_scan->callback([=, &action]() {
      action = [=]() {
        auto hit = sh::conjecture_scan(*which == "sp" ? sh::InsertionMode::sp
                                                      : sh::InsertionMode::o,
                                       *len_cap, *alpha_cap);
        json out{{"conjecture", *which},
                 {"len_cap", *len_cap},
                 {"alpha_cap", *alpha_cap}};
        if (hit)
          out["counterexample"] = json{{"v", hit->first}, {"w", hit->second}};
        else
          out["counterexample"] = nullptr;
        emit(out);
        return hit ? 4 : 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
    return action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const sh::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const sh::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
