// pfkit: exact Pfaffian computations and identity verification campaigns.
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pfkit/berkowitz.hpp"
#include "pfkit/combinat.hpp"
#include "pfkit/identities.hpp"
#include "pfkit/io.hpp"
#include "pfkit/pairs.hpp"
#include "pfkit/verify.hpp"

namespace {

int default_oracle_bound() {
  if (const char* env = std::getenv("PFKIT_ORACLE_BOUND")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw pfk::Error("bad PFKIT_ORACLE_BOUND value '" + std::string(env) + "'");
    }
  }
  return pfk::kMatchingBound;
}

int cmd_pf(const std::string& input, const std::string& ring_id, bool check, int bound) {
  const pfk::SkewMatrix a = pfk::read_skew_file(input, pfk::Ring::parse(ring_id));
  const pfk::Scalar pf = pfk::pfaffian(a);
  std::cout << pf.to_string() << "\n";
  if (check) {
    const pfk::Scalar oracle = pfk::pf_definition(a, bound);
    const bool match = pf == oracle;
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    if (!match) {
      std::cout << "oracle: " << oracle.to_string() << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_charpoly(const std::string& input, const std::string& ring_id) {
  const pfk::SkewMatrix a = pfk::read_skew_file(input, pfk::Ring::parse(ring_id));
  const pfk::CoeffSeq phi = pfk::char_poly(a);
  std::cout << phi.to_string() << "\n" << phi.to_poly_string() << "\n";
  return 0;
}

int cmd_pairs(const std::string& input_a, const std::string& input_b, const std::string& ring_id,
              bool check, int bound) {
  const pfk::Ring ring = pfk::Ring::parse(ring_id);
  const pfk::SkewMatrix a = pfk::read_skew_file(input_a, ring);
  const pfk::SkewMatrix b = pfk::read_skew_file(input_b, ring);
  const pfk::CoeffSeq q = pfk::pair_coeffs(a, b);
  std::cout << q.to_string() << "\n";
  if (check) {
    if (a.dim() % 2 != 0)
      throw pfk::Error("--check needs an even dimension, got " + std::to_string(a.dim()));
    const pfk::Scalar oracle = pfk::pair_product_oracle(a, b, bound);
    const bool match = q.constant() == oracle;
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    if (!match) {
      std::cout << "oracle: " << oracle.to_string() << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_oracle_dump(const std::string& kind, std::size_t dim, int len, int from) {
  if (kind == "matchings") {
    if (dim % 2 != 0) throw pfk::Error("matchings need an even dimension");
    for (const auto& m : pfk::enumerate_matchings(dim / 2)) {
      std::string line;
      for (const auto& [a, b] : m.pairs)
        line += "(" + std::to_string(a) + "," + std::to_string(b) + ") ";
      if (!line.empty()) line.pop_back();
      std::cout << line << " sign=" << (pfk::matching_sign(m) > 0 ? "+1" : "-1") << "\n";
    }
    return 0;
  }
  if (kind == "pclow-seqs") {
    if (len <= 0) len = static_cast<int>(dim);
    // an explicitly requested length is its own bound
    for (const auto& s : pfk::enumerate_pclow_seqs(static_cast<int>(dim), len, from, len)) {
      std::string line;
      for (const auto& c : s.clows) {
        line += "[";
        for (const auto& [u, v] : c.edges) line += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        line += "] ";
      }
      if (!line.empty()) line.pop_back();
      std::cout << line << "\n";
    }
    return 0;
  }
  throw pfk::Error("unknown dump kind '" + kind + "' (expected matchings or pclow-seqs)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Pfaffian toolkit: Berkowitz-type coefficients, pair coefficients, "
               "and identity verification against brute-force oracles"};
  app.require_subcommand(1);

  std::string input, input_b, ring_id = "int", kind = "matchings";
  bool check = false;
  int oracle_bound = -1;

  auto* pf = app.add_subcommand("pf", "Pfaffian of a skew matrix file");
  pf->add_option("input", input, "matrix file (text or JSON)")->required();
  pf->add_option("--ring", ring_id, "ring for text inputs (int|rat|zp:<p>)");
  pf->add_flag("--check", check, "cross-check against the matching-sum oracle");
  pf->add_option("--oracle-bound", oracle_bound, "max dimension for the oracle");

  auto* cp = app.add_subcommand("charpoly", "Pfaffian characteristic polynomial");
  cp->add_option("input", input, "matrix file (text or JSON)")->required();
  cp->add_option("--ring", ring_id, "ring for text inputs");

  auto* pr = app.add_subcommand("pairs", "P-coefficients of a pair of skew matrices");
  pr->add_option("inputA", input, "first matrix file")->required();
  pr->add_option("inputB", input_b, "second matrix file")->required();
  pr->add_option("--ring", ring_id, "ring for text inputs");
  pr->add_flag("--check", check, "compare q_0 against pf(A)pf(B) by the matching oracle");
  pr->add_option("--oracle-bound", oracle_bound, "max dimension for the oracle");

  pfk::RunConfig cfg;
  std::string verify_ring = "int";
  auto* vf = app.add_subcommand("verify", "seeded identity verification campaign");
  vf->add_option("identity", cfg.identity,
                 "pce|pad|mp|cayley|pch|transpose|scaling|embed|pairs-coincide|all")
      ->required();
  vf->add_option("--dim", cfg.dim, "matrix dimension (even)");
  vf->add_option("--trials", cfg.trials, "number of random trials");
  vf->add_option("--ring", verify_ring, "int|rat|zp:<p>|poly");
  vf->add_option("--bound", cfg.bound, "entry bound for random matrices");
  vf->add_option("--seed", cfg.seed, "campaign seed");
  vf->add_flag("--symbolic", cfg.symbolic, "verify as a polynomial identity on the generic matrix");
  vf->add_option("--format", cfg.format, "human|jsonl");

  std::size_t dump_dim = 4;
  int dump_len = 0, dump_from = 1;
  auto* od = app.add_subcommand("oracle-dump", "dump brute-force enumerations");
  od->add_option("--kind", kind, "matchings|pclow-seqs");
  od->add_option("--dim", dump_dim, "vertex count");
  od->add_option("--len", dump_len, "total pclow-sequence length (default dim)");
  od->add_option("--from", dump_from, "minimum vertex (1 or 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const int bound = oracle_bound > 0 ? oracle_bound : default_oracle_bound();
    if (app.got_subcommand(pf)) return cmd_pf(input, ring_id, check, bound);
    if (app.got_subcommand(cp)) return cmd_charpoly(input, ring_id);
    if (app.got_subcommand(pr)) return cmd_pairs(input, input_b, ring_id, check, bound);
    if (app.got_subcommand(vf)) {
      cfg.ring = pfk::Ring::parse(verify_ring);
      return pfk::run_verify(cfg, std::cout);
    }
    if (app.got_subcommand(od)) return cmd_oracle_dump(kind, dump_dim, dump_len, dump_from);
  } catch (const pfk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
