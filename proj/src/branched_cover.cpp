#include "knotcg/branched_cover.hpp"

namespace knotcg {

CoverHomology cover_homology(const SeifertMatrix& s) {
  CoverHomology h{symmetrize(s), {}, 1};
  for (const auto& d : smith_normal_form(h.presentation).invariant_factors) {
    if (d > 1) h.invariant_factors.push_back(d);
    h.order *= d;
  }
  return h;
}

namespace {

// Some prime p with P = p * (unimodular), if one exists.
std::optional<long> scaled_unimodular_prime(const IntMatrix& presentation) {
  if (presentation.empty()) return std::nullopt;
  mpz_class g = 0;
  for (const auto& x : presentation.entries()) g = gcd(g, x);
  if (g < 2 || !g.fits_slong_p() || !is_prime(g.get_si())) return std::nullopt;
  IntMatrix reduced(presentation.rows(), presentation.cols());
  for (std::size_t i = 0; i < presentation.rows(); ++i)
    for (std::size_t j = 0; j < presentation.cols(); ++j) {
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), presentation(i, j).get_mpz_t(), g.get_mpz_t());
      reduced(i, j) = q;
    }
  if (abs(determinant(reduced)) != 1) return std::nullopt;
  return g.get_si();
}

}  // namespace

LinkingForm linking_form(const SeifertMatrix& s) {
  const IntMatrix pres = symmetrize(s);
  const std::size_t n = pres.rows();
  const RatMatrix inv = rational_inverse(pres);

  LinkingForm form;
  form.presentation_gram = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form.presentation_gram(i, j) = mod_one(inv(i, j));

  if (auto p = scaled_unimodular_prime(pres)) {
    form.generators = IntMatrix::identity(n);
    form.orders.assign(n, mpz_class(*p));
  } else {
    // U P W = D: column i of U^{-1} generates the Z/d_i summand.
    const auto snf = smith_normal_form(pres);
    const RatMatrix u_inv = rational_inverse(snf.U);
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (snf.D(i, i) > 1) {
        cols.push_back(i);
        form.orders.push_back(snf.D(i, i));
      }
    form.generators = IntMatrix(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t i = 0; i < n; ++i)
        form.generators(i, c) = u_inv(i, cols[c]).get_num();
  }

  const std::size_t r = form.orders.size();
  const RatMatrix g = to_rational(form.generators);
  const RatMatrix pairing = g.transpose() * inv * g;
  form.gram = RatMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) form.gram(i, j) = mod_one(pairing(i, j));

  if (r > 0 && form.orders.front().fits_slong_p() &&
      is_prime(form.orders.front().get_si())) {
    bool uniform = true;
    for (const auto& d : form.orders) uniform = uniform && d == form.orders.front();
    if (uniform) form.p_elementary = form.orders.front().get_si();
  }
  return form;
}

bool is_nondegenerate(const LinkingForm& form) {
  const std::size_t r = form.rank();
  IntMatrix m(r, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const mpq_class v = mpq_class(form.orders[j]) * form.gram(i, j);
      if (v.get_den() != 1)
        throw Error(ErrorCode::Internal, "linking value incompatible with generator order");
      m(j, i) = v.get_num();
    }
  for (std::size_t j = 0; j < r; ++j) m(j, r + j) = form.orders[j];
  const auto snf = smith_normal_form(m);
  if (snf.invariant_factors.size() != r) return false;
  for (const auto& d : snf.invariant_factors)
    if (d != 1) return false;
  return true;
}

mpq_class linking_pairing(const LinkingForm& form, const ModPVector& x, const ModPVector& y) {
  if (x.size() != form.rank() || y.size() != form.rank())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from form rank");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0)
        acc += form.gram(i, j) * static_cast<long>(x[i]) * static_cast<long>(y[j]);
  }
  return mod_one(acc);
}

std::vector<ModPSubspace> metabolizers(const LinkingForm& form) {
  const std::size_t r = form.rank();
  if (r == 0) return {ModPSubspace(0, 0, {})};
  if (!form.p_elementary)
    throw Error(ErrorCode::NotPElementary,
                "metabolizer enumeration needs a p-elementary linking form");
  if (r % 2 != 0) return {};
  const long p = *form.p_elementary;

  std::vector<ModPSubspace> out;
  for (auto& h : enumerate_subspaces(p, r, r / 2)) {
    bool isotropic = true;
    for (const auto& x : h.basis()) {
      for (const auto& y : h.basis())
        if (linking_pairing(form, x, y) != 0) {
          isotropic = false;
          break;
        }
      if (!isotropic) break;
    }
    if (isotropic) out.push_back(std::move(h));
  }
  return out;
}

bool is_well_defined(const Character& chi, const IntMatrix& presentation) {
  if (chi.values.size() != presentation.rows())
    throw Error(ErrorCode::DimensionMismatch, "character length differs from presentation");
  for (std::size_t c = 0; c < presentation.cols(); ++c) {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < presentation.rows(); ++i)
      acc += static_cast<long>(chi.values[i]) * presentation(i, c);
    if (mod_p(acc, chi.p) != 0) return false;
  }
  return true;
}

std::vector<Character> vanishing_characters(const ModPSubspace& h) {
  std::vector<Character> out;
  for (auto& v : annihilator(h).elements()) out.push_back({h.p(), std::move(v)});
  return out;
}

}  // namespace knotcg
