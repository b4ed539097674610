#include "hkgeom/kummer/certificate.hpp"

#include <algorithm>

#include "hkgeom/parallel.hpp"

namespace hkgeom::kummer {

namespace {

void monomials_of_degree(std::size_t vars, unsigned degree, Monomial& cur, std::size_t pos, std::vector<Monomial>& out) {
  if (pos + 1 == vars) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    cur[pos] = e;
    monomials_of_degree(vars, degree - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

void add_to(SparseVector& v, std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

const char* kSoundness =
    "E is cut out by linear conditions that every equisingular first-order deformation satisfies, so E contains "
    "the equisingular space; E contained in T therefore certifies that equisingular first-order deformations are "
    "trivial. The converse inclusion is not used.";

}  // namespace

EquisingularSystem::EquisingularSystem(const KummerCover& cover, const CertifyOptions& options) : cover_(cover) {
  std::size_t nv = cover.r + 1;
  unsigned n = cover.n;
  std::vector<Monomial> all;
  Monomial cur(nv, 0);
  monomials_of_degree(nv, n, cur, 0, all);
  std::sort(all.begin(), all.end(), exact::GrLexLess{});
  for (const auto& m : all) {
    bool pure_high = false;
    for (std::size_t j = 3; j < nv; ++j) pure_high = pure_high || m[j] == n;
    if (pure_high) continue;
    index_.emplace(m, basis_.size());
    basis_.push_back(m);
  }
  relations_ = point_relations(cover);
  std::size_t q = basis_.size();
  std::size_t nphi = ambient_dim();
  aux_ = 3 * nv * relations_.size();
  if (aux_ + nphi > options.max_unknowns)
    throw GuardrailExceeded("equisingular system has " + std::to_string(aux_ + nphi) + " unknowns, above the bound " +
                            std::to_string(options.max_unknowns));

  // Trivial generators: a = z_m e_k.
  for (std::size_t k = 0; k < nv; ++k) {
    for (std::size_t m = 0; m < nv; ++m) {
      std::vector<MultiPoly> a(nv, MultiPoly(cover.vars));
      a[k] = MultiPoly::variable(cover.vars, m);
      trivial_.push_back(phi_vector(trivial_deformation(cover, a)));
    }
  }

  // Relation rows, aux columns first so that elimination projects onto Phi-space.
  std::vector<std::vector<SparseVector>> blocks(relations_.size());
  parallel_for(relations_.size(), options.threads, [&](std::size_t ri) {
    const PointRelation& rel = relations_[ri];
    std::vector<SparseVector> rows(q);
    std::size_t aux0 = 3 * nv * ri;
    struct Part {
      std::size_t comp;
      Scalar phi_coeff;
      Scalar aux_coeff;
    };
    Part parts[3] = {{rel.j, Scalar(1), Scalar(-1)},
                     {rel.i, -rel.lambda, rel.lambda},
                     {rel.k, Scalar(options.mu_sign) * rel.mu, rel.mu}};
    for (std::size_t p = 0; p < 3; ++p) {
      const Part& part = parts[p];
      if (part.comp >= 3) {
        std::size_t off = aux_ + (part.comp - 3) * q;
        for (std::size_t b = 0; b < q; ++b) add_to(rows[b], off + b, part.phi_coeff);
      }
      for (std::size_t m = 0; m < nv; ++m) {
        Monomial mono(nv, 0);
        mono[part.comp] = n - 1;
        mono[m] += 1;
        for (const auto& [b, v] : normal_form(mono)) add_to(rows[b], aux0 + p * nv + m, part.aux_coeff * v);
      }
    }
    blocks[ri] = std::move(rows);
  });

  SparseEchelon full(aux_ + nphi);
  for (auto& rows : blocks)
    for (auto& row : rows)
      if (!row.empty()) full.insert(std::move(row));
  constraints_ = SparseEchelon(nphi);
  for (const auto& [pivot, row] : full.rows()) {
    if (pivot < aux_) continue;
    SparseVector shifted;
    for (const auto& [c, v] : row) shifted.emplace(c - aux_, v);
    constraints_.insert(std::move(shifted));
  }
}

SparseVector EquisingularSystem::normal_form(const Monomial& m) const {
  if (exact::monomial_degree(m) != cover_.n) throw InvalidArgument("normal form expects a degree-n monomial");
  SparseVector v;
  for (std::size_t j = 3; j <= cover_.r; ++j) {
    if (m[j] != cover_.n) continue;
    const Triple& l = cover_.config.forms()[j];
    for (std::size_t c = 0; c < 3; ++c) {
      Monomial p(cover_.r + 1, 0);
      p[c] = cover_.n;
      add_to(v, index_.at(p), l[c]);
    }
    return v;
  }
  v.emplace(index_.at(m), Scalar(1));
  return v;
}

SparseVector EquisingularSystem::normal_form(const MultiPoly& form) const {
  SparseVector v;
  for (const auto& [m, c] : form.terms())
    for (const auto& [b, x] : normal_form(m)) add_to(v, b, c * x);
  return v;
}

SparseVector EquisingularSystem::phi_vector(const std::vector<MultiPoly>& phis) const {
  if (phis.size() != cover_.r - 2) throw InvalidArgument("expected one Phi per equation F_3..F_r");
  SparseVector v;
  for (std::size_t j = 0; j < phis.size(); ++j)
    for (const auto& [b, x] : normal_form(phis[j])) v.emplace(j * basis_.size() + b, x);
  return v;
}

bool EquisingularSystem::in_E(const SparseVector& phi) const {
  for (const auto& [pivot, row] : constraints_.rows())
    if (!exact::dot(row, phi).is_zero()) return false;
  return true;
}

DeformationReport certify_triviality(const KummerCover& cover, const CertifyOptions& options) {
  if (cover.n < 3) throw InvalidArgument("certificate requires n >= 3");
  if (cover.config.singular_count() == 0) throw InvalidArgument("configuration has no singular points");
  if (cover.r < 3) throw InvalidArgument("configuration needs at least four lines");
  EquisingularSystem sys(cover, options);
  DeformationReport rep;
  rep.n = cover.n;
  rep.lines = cover.r + 1;
  rep.relations = sys.relations().size();
  rep.quotient_dim = sys.quotient_dim();
  rep.ambient = sys.ambient_dim();
  rep.aux_unknowns = sys.aux_unknowns();

  SparseEchelon t(rep.ambient);
  for (const auto& g : sys.trivial_generators()) {
    t.insert(g);
    if (!sys.in_E(g)) ++rep.trivial_generators_outside_E;
  }
  rep.trivial_in_E = rep.trivial_generators_outside_E == 0;
  rep.dim_T = t.rank();
  rep.dim_E = rep.ambient - sys.constraints().rank();

  SparseEchelon sum = t;
  for (const auto& e : sys.constraints().kernel_basis()) {
    if (sum.insert(e) && rep.witness.empty()) {
      for (const auto& [idx, c] : e)
        rep.witness.push_back({3 + idx / rep.quotient_dim, sys.basis()[idx % rep.quotient_dim], c});
    }
  }
  rep.dim_E_plus_T = sum.rank();
  rep.contained = rep.dim_E_plus_T == rep.dim_T;
  rep.soundness_note = kSoundness;
  return rep;
}

}  // namespace hkgeom::kummer
