#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "picketlab/hom.hpp"
#include "picketlab/io.hpp"
#include "picketlab/random.hpp"
#include "picketlab/verify.hpp"

namespace {

using namespace picketlab;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << content;
}

int cmd_tableau(const std::string& file, bool transpose) {
  const Embedding M = read_embedding(file);
  const LRTableau t = lr_tableau_of(M);
  std::cout << render_tableau(t, transpose) << tableau_chain_json(t);
  return kExitOk;
}

int cmd_verify(const std::string& file, int theorem, int max_m) {
  const Embedding M = read_embedding(file);
  const std::vector<VerifyRow> rows =
      theorem == 1 ? verify_theorem1(M, max_m, worker_count())
                   : verify_theorem3(M, max_m, worker_count());
  write_tsv_header(std::cout);
  write_tsv_rows(std::cout, file, rows);
  for (const VerifyRow& r : rows)
    if (!r.agree()) return kExitMathFailure;
  return kExitOk;
}

int cmd_lr_coeff(const std::string& alpha, const std::string& beta,
                 const std::string& gamma, bool list) {
  const std::vector<LRTableau> all = enumerate_tableaux(
      parse_partition(alpha), parse_partition(beta), parse_partition(gamma));
  std::cout << all.size() << "\n";
  if (list)
    for (const LRTableau& t : all) std::cout << tableau_chain_json(t);
  return kExitOk;
}

std::string describe_morphism(const PicketMorphism& f) {
  std::string s;
  s += f.kind;
  s += "_" + std::to_string(f.idx) + "^" + std::to_string(f.m) + ": ";
  auto sum = [](const std::vector<Picket>& ps) {
    std::string t;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i) t += " + ";
      t += "P_" + std::to_string(ps[i].l) + "^" + std::to_string(ps[i].m);
    }
    return t.empty() ? std::string("0") : t;
  };
  s += sum(f.source) + " -> " + sum(f.target) + "  components [";
  for (std::size_t i = 0; i < f.scalars.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(f.scalars[i]);
  }
  return s + "]\n";
}

int cmd_construct(const std::string& kind, std::int64_t p,
                  const std::vector<int>& idx, const std::string& out) {
  if (kind == "c" || kind == "a") {
    if (idx.size() != 3) throw CLI::ValidationError("need indices n l m / n q m");
    const Embedding M = kind == "c" ? construct_c(p, idx[0], idx[1], idx[2])
                                    : construct_a(p, idx[0], idx[1], idx[2]);
    emit(out, serialize_embedding(M));
  } else if (kind == "picket") {
    if (idx.size() != 2) throw CLI::ValidationError("need indices l m");
    emit(out, serialize_embedding(picket_embedding(p, idx[0], idx[1])));
  } else if (kind == "g" || kind == "h") {
    if (idx.size() != 2) throw CLI::ValidationError("need indices l m / q m");
    const PicketMorphism f =
        kind == "g" ? make_g(p, idx[0], idx[1]) : make_h(p, idx[0], idx[1]);
    emit(out, describe_morphism(f));
  } else {
    throw CLI::ValidationError("kind must be one of c, a, picket, g, h");
  }
  return kExitOk;
}

int cmd_random(std::int64_t p, const std::string& beta, int gens,
               std::uint64_t seed, const std::string& out) {
  const Embedding M = random_embedding(p, parse_partition(beta), gens, seed);
  emit(out, serialize_embedding(M));
  return kExitOk;
}

int cmd_pairing(const std::string& side, int n, int idx, int m,
                const std::string& file, std::uint64_t seed) {
  const Embedding M = read_embedding(file);
  PairingOptions opts;
  opts.sample_seed = seed;
  const PairingReport rep = side == "left" ? pairing_left(n, idx, m, M, opts)
                                           : pairing_right(n, idx, m, M, opts);
  std::cout << "picket-dim-ok\t" << (rep.picket_dim_ok ? "yes" : "no") << "\n"
            << "quotient-dim\t" << rep.quotient_dim << "\n"
            << "cosets-checked\t" << rep.cosets_checked << "\n"
            << "failures\t" << rep.failures << "\n";
  if (rep.vacuous) std::cout << "note\tvacuous\n";
  return rep.nondegenerate() ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"picketlab: embeddings of finite-length modules, their "
               "LR-tableaux, and Hom-spaces into/out of pickets"};
  app.require_subcommand(1);

  std::string file, out, side = "left", kind, alpha, beta, gamma;
  std::int64_t p = 2;
  std::uint64_t seed = 0;
  int theorem = 1, max_m = -1, gens = 1, n = 0, idx = 0, m = 1;
  bool transpose = false, list = false;
  std::vector<int> indices;

  auto* t = app.add_subcommand("tableau", "Render the LR-tableau of an embedding");
  t->add_option("file", file)->required();
  t->add_flag("--transpose", transpose, "rows-as-parts rendering");

  auto* v = app.add_subcommand("verify", "Three-route verification sweep");
  v->add_option("file", file)->required();
  v->add_option("--theorem", theorem)->check(CLI::IsMember({1, 3}));
  v->add_option("--max-m", max_m, "sweep bound (default beta_1 + 1)");

  auto* lc = app.add_subcommand("lr-coeff", "Count LR-tableaux of a given type");
  lc->add_option("--alpha", alpha)->required();
  lc->add_option("--beta", beta)->required();
  lc->add_option("--gamma", gamma)->required();
  lc->add_flag("--list", list, "print every tableau chain");

  auto* c = app.add_subcommand("construct", "Write a named object or morphism");
  c->add_option("kind", kind)->required();
  c->add_option("indices", indices)->expected(2, 3);
  c->add_option("--p", p);
  c->add_option("-o", out, "output file (default stdout)");

  auto* r = app.add_subcommand("random", "Seeded pseudo-random embedding");
  r->add_option("--p", p);
  r->add_option("--beta", beta)->required();
  r->add_option("--gens", gens);
  r->add_option("--seed", seed);
  r->add_option("-o", out, "output file (default stdout)");

  auto* pr = app.add_subcommand("pairing", "Non-degeneracy check for one cell");
  pr->add_option("side", side)->check(CLI::IsMember({"left", "right"}));
  pr->add_option("n", n)->required();
  pr->add_option("idx", idx)->required();
  pr->add_option("m", m)->required();
  pr->add_option("file", file)->required();
  pr->add_option("--seed", seed, "sampling seed past the coset cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (t->parsed()) return cmd_tableau(file, transpose);
    if (v->parsed()) return cmd_verify(file, theorem, max_m);
    if (lc->parsed()) return cmd_lr_coeff(alpha, beta, gamma, list);
    if (c->parsed()) return cmd_construct(kind, p, indices, out);
    if (r->parsed()) return cmd_random(p, beta, gens, seed, out);
    if (pr->parsed()) return cmd_pairing(side, n, idx, m, file, seed);
  } catch (const RouteDisagreement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitUsage;
}
