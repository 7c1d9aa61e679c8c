// Command-line front end: ad-hoc word and automorphism computations, the
// machine-verification suites with JSON reports, and the spine explorer.
//
// Exit codes: 0 success / all claims pass, 1 some claim failed, 2 usage or
// parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <coxrig/automorphism.hpp>
#include <coxrig/presentation.hpp>
#include <coxrig/rank3.hpp>
#include <coxrig/report.hpp>
#include <coxrig/spine.hpp>
#include <coxrig/subgroup.hpp>
#include <coxrig/verify.hpp>
#include <coxrig/word.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "4" or "3..5".
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad --n range '" + text + "' (expected N or A..B)");
  }
}

json report_to_json(const coxrig::ClaimReport& r) {
  return json{{"claim", r.claim_id},
              {"ref", r.ref},
              {"status", r.status()},
              {"pass", r.pass},
              {"details", r.details},
              {"elapsed_ms", r.elapsed_ms}};
}

json shape_to_json(const coxrig::GraphShape& s, int index) {
  return json{{"shape_id", index},
              {"key", s.canonical().key},
              {"vertices", s.num_vertices},
              {"leaves", s.leaves().size()},
              {"labeled", s.labeled_vertices().size()},
              {"rank", s.rank},
              {"star_class", coxrig::star_class_name(s.classify_star())},
              {"twist_rank", s.twist_kernel_rank()},
              {"base", s.base ? json(*s.base) : json(nullptr)},
              {"automorphisms", s.canonical().autos}};
}

void write_dot_file(const std::string& dir, const std::string& name, const std::string& dot) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir + "/" + name + ".dot");
  out << dot;
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations in the universal Coxeter group W_n, its automorphisms, and the "
               "spine of its outer space"};
  app.require_subcommand(1);

  // --- word ---------------------------------------------------------------
  auto* word_cmd = app.add_subcommand("word", "reduced-word arithmetic");
  word_cmd->require_subcommand(1);
  int wn = 4;
  std::string w_arg1, w_arg2;

  auto* w_reduce = word_cmd->add_subcommand("reduce", "reduce a letter sequence");
  w_reduce->add_option("--n", wn, "rank")->required();
  w_reduce->add_option("letters", w_arg1, "word, e.g. \"1 1 2\"")->required();

  auto* w_mul = word_cmd->add_subcommand("mul", "product of two words");
  w_mul->add_option("--n", wn, "rank")->required();
  w_mul->add_option("u", w_arg1)->required();
  w_mul->add_option("v", w_arg2)->required();

  auto* w_inv = word_cmd->add_subcommand("inv", "inverse of a word");
  w_inv->add_option("--n", wn, "rank")->required();
  w_inv->add_option("u", w_arg1)->required();

  auto* w_conj = word_cmd->add_subcommand("conj", "conjugate g u g^-1");
  w_conj->add_option("--n", wn, "rank")->required();
  w_conj->add_option("u", w_arg1)->required();
  w_conj->add_option("g", w_arg2)->required();

  // --- aut ----------------------------------------------------------------
  auto* aut_cmd = app.add_subcommand("aut", "automorphisms in canonical form");
  aut_cmd->require_subcommand(1);
  int an = 4;
  std::string a_expr, a_expr2, a_word;
  int a_bound = 10000;

  auto* a_apply = aut_cmd->add_subcommand("apply", "apply an automorphism expression to a word");
  a_apply->add_option("--n", an, "rank")->required();
  a_apply->add_option("--expr", a_expr, "expression, e.g. \"s3,2;s4,2\"")->required();
  a_apply->add_option("--word", a_word, "word to map")->required();

  auto* a_canon = aut_cmd->add_subcommand("canon", "print generator images of an expression");
  a_canon->add_option("--n", an, "rank")->required();
  a_canon->add_option("--expr", a_expr)->required();

  auto* a_outer_eq = aut_cmd->add_subcommand("outer-eq", "compare two expressions modulo inner");
  a_outer_eq->add_option("--n", an, "rank")->required();
  a_outer_eq->add_option("a", a_expr)->required();
  a_outer_eq->add_option("b", a_expr2)->required();

  auto* a_order = aut_cmd->add_subcommand("order", "order of the outer class of an expression");
  a_order->add_option("--n", an, "rank")->required();
  a_order->add_option("--expr", a_expr)->required();
  a_order->add_option("--bound", a_bound, "search bound");

  // --- relators --------------------------------------------------------------
  auto* rel_cmd = app.add_subcommand("relators", "dump the presentation relators, one per line");
  int rn = 4;
  std::string rel_families = "abcdefg";
  rel_cmd->add_option("--n", rn, "rank")->required();
  rel_cmd->add_option("--families", rel_families, "subset of abcdefg");

  // --- rank3 ------------------------------------------------------------------
  auto* rank3_cmd = app.add_subcommand("rank3", "the matrix class induced at rank 3");
  rank3_cmd->require_subcommand(1);
  std::string m_expr;
  auto* r_matrix = rank3_cmd->add_subcommand("matrix",
                                             "abelianized matrix of an automorphism expression");
  r_matrix->add_option("--expr", m_expr, "expression at rank 3")->required();

  // --- verify ---------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run the machine-verification suites");
  std::string scope = "all", n_range = "3..5", out_file;
  coxrig::VerifyOptions vopt;
  bool inject = false;
  verify_cmd->add_option("--scope", scope, "all|gilbert|w4|subgroups|s6|spine|rank3|oracles");
  verify_cmd->add_option("--n", n_range, "rank or range, e.g. 4 or 3..5");
  verify_cmd->add_option("--out", out_file, "write the JSON report here instead of stdout");
  verify_cmd->add_option("--seed", vopt.seed, "seed for randomized property samples")
      ->envname("COXRIG_SEED");
  verify_cmd->add_option("--max-closure", vopt.closure_cap, "closure size cap");
  verify_cmd->add_flag("--inject-failure", inject, "append a deliberately failing claim")
      ->group("");  // hidden; used to exercise exit codes

  // --- spine ------------------------------------------------------------------
  auto* spine_cmd = app.add_subcommand("spine", "shapes and marked stars of the spine");
  spine_cmd->require_subcommand(1);
  int sn = 4;
  bool pointed = false, as_json = false;
  std::string dot_dir;

  auto* s_enum = spine_cmd->add_subcommand("enumerate", "all shapes up to isomorphism");
  s_enum->add_option("--n", sn, "rank (2..6)")->required();
  s_enum->add_flag("--pointed", pointed, "enumerate pointed shapes");
  s_enum->add_flag("--json", as_json, "JSON output");
  s_enum->add_option("--dot", dot_dir, "write one DOT file per shape into this directory");

  auto* s_stars = spine_cmd->add_subcommand("stars", "the standard marked stars");
  s_stars->add_option("--n", sn, "rank (3..6)")->required();
  s_stars->add_flag("--json", as_json, "JSON output");
  s_stars->add_option("--dot", dot_dir, "write DOT files into this directory");

  auto* s_adj = spine_cmd->add_subcommand("adjacency",
                                          "zero-stars adjacent to the standard F-star");
  s_adj->add_option("--n", sn, "rank (3..6)")->required();
  s_adj->add_flag("--json", as_json, "JSON output");
  s_adj->add_option("--dot", dot_dir, "write DOT files into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (w_reduce->parsed()) {
    std::cout << coxrig::Word::parse(w_arg1, wn).str() << "\n";
  } else if (w_mul->parsed()) {
    std::cout << (coxrig::Word::parse(w_arg1, wn) * coxrig::Word::parse(w_arg2, wn)).str() << "\n";
  } else if (w_inv->parsed()) {
    std::cout << coxrig::Word::parse(w_arg1, wn).inverse().str() << "\n";
  } else if (w_conj->parsed()) {
    std::cout << coxrig::Word::parse(w_arg1, wn).conjugated_by(coxrig::Word::parse(w_arg2, wn)).str()
              << "\n";
  } else if (a_apply->parsed()) {
    auto a = coxrig::parse_automorphism(a_expr, an);
    std::cout << a.apply(coxrig::Word::parse(a_word, an)).str() << "\n";
  } else if (a_canon->parsed()) {
    std::cout << coxrig::parse_automorphism(a_expr, an).str() << "\n";
  } else if (a_outer_eq->parsed()) {
    bool eq = coxrig::outer_equal(coxrig::parse_automorphism(a_expr, an),
                                  coxrig::parse_automorphism(a_expr2, an));
    std::cout << (eq ? "equal" : "not equal") << "\n";
  } else if (a_order->parsed()) {
    std::cout << coxrig::outer(coxrig::parse_automorphism(a_expr, an)).order(a_bound) << "\n";
  } else if (rel_cmd->parsed()) {
    for (const auto& r : coxrig::enumerate_relators(rn, rel_families)) {
      for (std::size_t k = 0; k < r.word.size(); ++k)
        std::cout << (k ? " " : "") << r.word[k].str();
      std::cout << "\n";
    }
  } else if (r_matrix->parsed()) {
    coxrig::Mat2 m = coxrig::induced_matrix(coxrig::parse_automorphism(m_expr, 3));
    coxrig::Mat2 p = m.pgl_normalized();
    std::cout << json{{"matrix", {{m.a, m.b}, {m.c, m.d}}},
                      {"pgl_sign_normalized", {{p.a, p.b}, {p.c, p.d}}},
                      {"det", m.det()}}
                     .dump(2)
              << "\n";
  } else if (verify_cmd->parsed()) {
    auto [lo, hi] = parse_range(n_range);
    if (lo > hi || lo < 2 || hi > 6) throw UsageError("verify supports ranks between 2 and 6");
    vopt.n_lo = lo;
    vopt.n_hi = hi;
    vopt.inject_failure = inject;
    auto reports = coxrig::verify_scope(scope, vopt);
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back(report_to_json(r));
      std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.claim_id << " (" << r.elapsed_ms << " ms)"
                << (r.pass ? "" : "  " + r.details) << "\n";
    }
    if (out_file.empty()) {
      std::cout << arr.dump(2) << "\n";
    } else {
      std::ofstream out(out_file);
      if (!out) throw UsageError("cannot open --out file '" + out_file + "'");
      out << arr.dump(2) << "\n";
    }
    return coxrig::all_pass(reports) ? 0 : 1;
  } else if (s_enum->parsed()) {
    auto shapes = coxrig::enumerate_shapes(sn, pointed);
    json arr = json::array();
    int index = 0;
    for (const auto& s : shapes) {
      arr.push_back(shape_to_json(s, index));
      if (!dot_dir.empty())
        write_dot_file(dot_dir, "shape_" + std::to_string(index), coxrig::shape_dot(s));
      ++index;
    }
    if (as_json) {
      std::cout << arr.dump(2) << "\n";
    } else {
      std::cout << shapes.size() << " shapes at n = " << sn << (pointed ? " (pointed)" : "") << "\n";
      for (const auto& item : arr)
        std::cout << "  #" << item["shape_id"] << "  vertices=" << item["vertices"]
                  << " leaves=" << item["leaves"]
                  << " class=" << item["star_class"].get<std::string>()
                  << " twist_rank=" << item["twist_rank"] << "\n";
    }
  } else if (s_stars->parsed()) {
    auto z = coxrig::standard_zero_star(sn);
    auto f = coxrig::standard_f_star(sn);
    json arr = json::array();
    std::vector<std::pair<std::string, coxrig::SpineVertex>> stars{{"zero_star", z}, {"f_star", f}};
    for (const auto& [name, v] : stars) {
      arr.push_back(json{{"name", name},
                         {"star_class", coxrig::star_class_name(v.star_class())},
                         {"key", v.key()},
                         {"twist_rank", v.rep().shape.twist_kernel_rank()}});
      if (!dot_dir.empty()) write_dot_file(dot_dir, name, coxrig::marked_dot(v.rep()));
    }
    if (as_json)
      std::cout << arr.dump(2) << "\n";
    else
      for (const auto& item : arr)
        std::cout << item["name"].get<std::string>() << ": "
                  << item["star_class"].get<std::string>() << "  twist_rank=" << item["twist_rank"]
                  << "\n";
  } else if (s_adj->parsed()) {
    auto family = coxrig::zero_stars_adjacent_to_f_star(sn);
    std::vector<coxrig::OuterClass> t_gens;
    for (int i = 1; i + 1 < sn; ++i)
      t_gens.push_back(coxrig::outer(coxrig::Automorphism::tau(i, sn)));
    json arr = json::array();
    int index = 0;
    for (const auto& v : family) {
      bool b_fixed = true;
      for (const auto& g : t_gens) b_fixed = b_fixed && v.stabilized_by(g);
      arr.push_back(json{{"star_id", index},
                         {"key", v.key()},
                         {"fixed_by_b", b_fixed},
                         {"is_standard_zero_star", v == coxrig::standard_zero_star(sn)}});
      if (!dot_dir.empty())
        write_dot_file(dot_dir, "adjacent_zero_star_" + std::to_string(index),
                       coxrig::marked_dot(v.rep()));
      ++index;
    }
    if (as_json) {
      std::cout << arr.dump(2) << "\n";
    } else {
      std::cout << family.size() << " zero-star classes adjacent to the standard F-star at n = "
                << sn << "\n";
      for (const auto& item : arr)
        std::cout << "  #" << item["star_id"]
                  << (item["fixed_by_b"].get<bool>() ? "  [fixed by B]" : "")
                  << (item["is_standard_zero_star"].get<bool>() ? "  [standard zero-star]" : "")
                  << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const coxrig::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
