// Command-line surface for the rook-poset toolkit.
//
// Exit codes: 0 yes/success, 1 no, 2 parse or validation failure,
// 3 resource guard, 4 structural inconsistency (not a rook poset).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ferrers/board.hpp"
#include "ferrers/bruhat.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/placement.hpp"
#include "ferrers/poset.hpp"
#include "ferrers/reconstruct.hpp"
#include "ferrers/verify.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitInconsistent = 4;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << text;
}

std::string entanglement_dot(const ferrers::GjwSequence& g) {
  ferrers::RowGraph rg = ferrers::switch_partner_graph(g);
  std::ostringstream os;
  os << "graph entanglement {\n";
  for (int v : rg.vertices)
    os << "  r" << v << " [label=\"row " << v << " (a=" << g.entry(v)
       << ")\"];\n";
  for (auto [a, b] : rg.edges) os << "  r" << a << " -- r" << b << ";\n";
  os << "}\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"rook posets of Ferrers boards: block normal forms, "
               "isomorphism testing, and reconstruction"};
  app.require_subcommand(1);

  std::string board_a, board_b, perm_text, input_path, out_path;
  std::string format = "json";
  long long max_elements = ferrers::kDefaultMaxElements;
  bool with_oracle = false;
  ferrers::CorpusSpec corpus;

  auto* nf = app.add_subcommand("normal-form",
                                "canonical block normal form of a board");
  nf->add_option("board", board_a, "board, e.g. 3,3,5,6,6 or g:2,1,2,2,1")
      ->required();

  auto* eq = app.add_subcommand("equiv",
                                "decide whether two boards have isomorphic "
                                "rook posets");
  eq->add_option("a", board_a, "first board")->required();
  eq->add_option("b", board_b, "second board")->required();
  eq->add_flag("--oracle", with_oracle,
               "also run the brute-force isomorphism oracle and report "
               "agreement");
  eq->add_option("--max-elements", max_elements, "oracle size guard");

  auto* ps = app.add_subcommand("poset", "emit the rook poset");
  ps->add_option("board", board_a, "board")->required();
  ps->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  ps->add_option("-o,--out", out_path, "output file (default stdout)");
  ps->add_option("--max-elements", max_elements, "poset size guard");

  auto* pc = app.add_subcommand("poincare", "rank sizes of the rook poset");
  pc->add_option("board", board_a, "board")->required();
  pc->add_option("--max-elements", max_elements, "poset size guard");

  auto* en = app.add_subcommand("entangle",
                                "entanglement forest of the coatoms (DOT)");
  en->add_option("board", board_a, "board")->required();
  en->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* pm = app.add_subcommand("perm",
                                "top permutation and 312-avoidance check");
  pm->add_option("board", board_a, "board")->required();

  auto* iv = app.add_subcommand("interval",
                                "lower Bruhat interval of a permutation");
  iv->add_option("perm", perm_text, "permutation, e.g. [3,2,5,6,4,1]")
      ->required();
  iv->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  iv->add_option("-o,--out", out_path, "output file (default stdout)");
  iv->add_option("--max-elements", max_elements, "interval size guard");

  auto* rc = app.add_subcommand("reconstruct",
                                "recover the normal form from a poset JSON "
                                "file ('-' for stdin)");
  rc->add_option("poset", input_path, "poset JSON path or -")->required();

  auto* vf = app.add_subcommand("verify",
                                "run the exhaustive verification suites");
  vf->add_option("--max-rows", corpus.max_rows, "corpus row bound");
  vf->add_option("--max-poset-size", corpus.max_poset_size,
                 "corpus poset size bound");

  CLI11_PARSE(app, argc, argv);

  if (nf->parsed()) {
    ferrers::Partition p = ferrers::parse_board(board_a);
    std::cout << ferrers::normal_form(p.gjw()).to_line() << "\n";
    return kExitYes;
  }

  if (eq->parsed()) {
    ferrers::Partition a = ferrers::parse_board(board_a);
    ferrers::Partition b = ferrers::parse_board(board_b);
    const bool eqv = ferrers::equivalent(a, b);
    std::cout << (eqv ? "equivalent" : "inequivalent") << "\n";
    if (with_oracle) {
      ferrers::Poset pa = ferrers::build_poset(a, max_elements);
      ferrers::Poset pb = ferrers::build_poset(b, max_elements);
      const bool iso = ferrers::are_isomorphic(pa, pb, max_elements);
      std::cout << "oracle: " << (iso ? "isomorphic" : "non-isomorphic")
                << "\n";
      if (iso != eqv) {
        std::cout << "agreement: no\n";
        return kExitInconsistent;
      }
      std::cout << "agreement: yes\n";
    }
    return eqv ? kExitYes : kExitNo;
  }

  if (ps->parsed()) {
    ferrers::Partition p = ferrers::parse_board(board_a);
    ferrers::Poset poset = ferrers::build_poset(p, max_elements);
    write_output(out_path, format == "dot" ? ferrers::poset_to_dot(poset)
                                           : ferrers::poset_to_json(poset) +
                                                 "\n");
    return kExitYes;
  }

  if (pc->parsed()) {
    ferrers::Partition p = ferrers::parse_board(board_a);
    ferrers::Poset poset = ferrers::build_poset(p, max_elements);
    const auto coeffs = ferrers::poincare_polynomial(poset).coefficients;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      std::cout << (i ? " " : "") << coeffs[i];
    std::cout << "\n";
    return kExitYes;
  }

  if (en->parsed()) {
    ferrers::Partition p = ferrers::parse_board(board_a);
    write_output(out_path, entanglement_dot(p.gjw()));
    return kExitYes;
  }

  if (pm->parsed()) {
    ferrers::Partition p = ferrers::parse_board(board_a);
    ferrers::Permutation top = ferrers::top_permutation(p);
    std::cout << top.to_string() << "\n"
              << "312-avoiding: " << (ferrers::avoids_312(top) ? "yes" : "no")
              << "\n";
    return kExitYes;
  }

  if (iv->parsed()) {
    ferrers::Permutation w = ferrers::parse_permutation(perm_text);
    ferrers::Poset poset = ferrers::lower_bruhat_interval(w, max_elements);
    write_output(out_path, format == "dot" ? ferrers::poset_to_dot(poset)
                                           : ferrers::poset_to_json(poset) +
                                                 "\n");
    return kExitYes;
  }

  if (rc->parsed()) {
    std::string text;
    if (input_path == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream in(input_path);
      if (!in) throw std::invalid_argument("cannot read " + input_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    ferrers::Poset poset = ferrers::poset_from_json(text);
    std::cout << ferrers::reconstruct(poset).to_line() << "\n";
    return kExitYes;
  }

  if (vf->parsed()) {
    bool all = true;
    for (const ferrers::SuiteResult& r : ferrers::run_verify(corpus)) {
      std::printf("%s %-24s %s [%.2fs]\n", r.pass ? "PASS" : "FAIL",
                  r.name.c_str(), r.detail.c_str(), r.seconds);
      all = all && r.pass;
    }
    return all ? kExitYes : kExitNo;
  }

  return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ferrers::ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ferrers::NotRookPosetError& e) {
    std::cout << "not a rook poset: " << e.step() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
