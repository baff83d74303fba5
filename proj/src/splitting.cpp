#include "hurwitz/splitting.hpp"

#include <numeric>
#include <sstream>

#include "hurwitz/abelian.hpp"

namespace hurwitz {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mod_reduce(i128 v, i64 m) {
  i64 r = static_cast<i64>(v % m);
  return r < 0 ? r + m : r;
}

i64 mod_mul(i64 a, i64 b, i64 m) { return mod_reduce(static_cast<i128>(a) * b, m); }

// Extended Euclid; requires gcd(a, m) = 1.
i64 mod_inv(i64 a, i64 m) {
  i64 t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    i64 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) raise(Errc::singular_generator, "value not invertible mod " + std::to_string(m));
  return t < 0 ? t + m : t;
}

i64 reduce_int(const Int& v, i64 m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r.convert_to<i64>();
}

}  // namespace

SplittingData find_splitting(i64 p, int k) {
  if (p == 2) raise(Errc::invalid_prime, "the algebra is division at 2; no splitting exists");
  if (!is_prime(p) || k < 1) raise(Errc::invalid_argument, "need an odd prime and k >= 1");

  // Stay within the safe range for __int128 products of residues.
  i64 modulus = p;
  for (int i = 1; i < k; ++i) {
    if (modulus > (i64{1} << 31) / p)
      raise(Errc::overflow, "p^k exceeds the supported modulus range");
    modulus *= p;
  }

  i64 a = -1, b = -1;
  for (i64 ca = 0; ca < p && a < 0; ++ca)
    for (i64 cb = 0; cb < p; ++cb)
      if ((ca * ca + cb * cb + 1) % p == 0) {
        a = ca;
        b = cb;
        break;
      }
  if (a < 0) raise(Errc::match_not_found, "no solution of a^2+b^2+1 = 0 mod p");

  // Hensel: lift in whichever variable has an invertible derivative.
  i64 m = p;
  while (m < modulus) {
    i64 next = m * p;
    i64 f = mod_reduce(static_cast<i128>(a) * a + static_cast<i128>(b) * b + 1, next);
    if (b % p != 0) {
      b = mod_reduce(b - static_cast<i128>(f) * mod_inv(2 * b % next, next), next);
    } else {
      a = mod_reduce(a - static_cast<i128>(f) * mod_inv(2 * a % next, next), next);
    }
    m = next;
  }
  i64 check = mod_reduce(static_cast<i128>(a) * a + static_cast<i128>(b) * b + 1, modulus);
  if (check != 0) raise(Errc::match_not_found, "Hensel lift failed");
  return SplittingData{p, k, a, b, modulus};
}

ResidueMatrix ResidueMatrix::identity(i64 m) { return {m, {1 % m, 0, 0, 1 % m}}; }

ResidueMatrix ResidueMatrix::mul(const ResidueMatrix& o) const {
  const auto& a = e;
  const auto& b = o.e;
  return {m,
          {mod_reduce(static_cast<i128>(a[0]) * b[0] + static_cast<i128>(a[1]) * b[2], m),
           mod_reduce(static_cast<i128>(a[0]) * b[1] + static_cast<i128>(a[1]) * b[3], m),
           mod_reduce(static_cast<i128>(a[2]) * b[0] + static_cast<i128>(a[3]) * b[2], m),
           mod_reduce(static_cast<i128>(a[2]) * b[1] + static_cast<i128>(a[3]) * b[3], m)}};
}

i64 ResidueMatrix::det() const {
  return mod_reduce(static_cast<i128>(e[0]) * e[3] - static_cast<i128>(e[1]) * e[2], m);
}

ResidueMatrix ResidueMatrix::inverse() const {
  i64 dinv = mod_inv(det(), m);
  auto n = [&](i64 v) { return mod_mul(((v % m) + m) % m, dinv, m); };
  return {m, {n(e[3]), n(-e[1]), n(-e[2]), n(e[0])}};
}

ResidueMatrix ResidueMatrix::reduced(i64 q) const {
  return {q, {e[0] % q, e[1] % q, e[2] % q, e[3] % q}};
}

bool ResidueMatrix::is_scalar() const { return e[1] == 0 && e[2] == 0 && e[0] == e[3]; }

std::string ResidueMatrix::to_string() const {
  std::ostringstream out;
  out << "[[" << e[0] << "," << e[1] << "],[" << e[2] << "," << e[3] << "]]";
  return out.str();
}

ResidueMatrix rho(const HurwitzElement& x, const SplittingData& s) {
  const i64 m = s.modulus;
  const i64 inv2 = mod_inv(2, m);
  const i64 w = reduce_int(x.w, m), xx = reduce_int(x.x, m), y = reduce_int(x.y, m),
            z = reduce_int(x.z, m);
  // Basis images: 1 -> id, I -> [[a,b],[b,-a]], J -> [[0,1],[-1,0]],
  // IJ -> [[-b,a],[a,b]]; the element is (w + x I + y J + z IJ)/2.
  i64 e0 = mod_reduce(static_cast<i128>(w) + static_cast<i128>(xx) * s.a - static_cast<i128>(z) * s.b, m);
  i64 e1 = mod_reduce(static_cast<i128>(xx) * s.b + y + static_cast<i128>(z) * s.a, m);
  i64 e2 = mod_reduce(static_cast<i128>(xx) * s.b - y + static_cast<i128>(z) * s.a, m);
  i64 e3 = mod_reduce(static_cast<i128>(w) - static_cast<i128>(xx) * s.a + static_cast<i128>(z) * s.b, m);
  return {m, {mod_mul(e0, inv2, m), mod_mul(e1, inv2, m), mod_mul(e2, inv2, m), mod_mul(e3, inv2, m)}};
}

NeighborLabel neighbor_label(const ProjectiveClass& c, const SplittingData& s) {
  if (c.norm() != s.p)
    raise(Errc::norm_mismatch, "class norm does not equal the splitting prime");
  ResidueMatrix mat = rho(c.rep(), s).reduced(s.p);
  // Rank-one mod p: the column space is spanned by any nonzero column.
  i64 u = mat.e[0], v = mat.e[2];
  if (u == 0 && v == 0) {
    u = mat.e[1];
    v = mat.e[3];
  }
  if (u == 0 && v == 0)
    raise(Errc::norm_mismatch, "matrix image vanishes mod p; representative not primitive");
  if (u % s.p != 0) return {1, mod_mul(v, mod_inv(u, s.p), s.p)};
  return {0, 1};
}

std::string NeighborLabel::to_string() const {
  return "(" + std::to_string(u) + ":" + std::to_string(v) + ")";
}

CongruenceReport congruence_image(const Presentation& p, i64 q, int r, std::uint64_t cap) {
  if (p.s_set.contains(q)) raise(Errc::prime_in_s, "q must lie outside S");
  SplittingData s = find_splitting(q, r);

  CongruenceReport report;
  report.q = q;
  report.r = r;

  for (const auto& g : p.generators) {
    ResidueMatrix img = rho(g.witness.rep(), s);
    if (std::gcd(img.det(), q) != 1)
      raise(Errc::singular_generator, "generator image is singular mod " + std::to_string(q));
    report.generator_images.push_back(img);
  }

  report.all_scalar = true;
  for (const Word& w : p.relators) {
    ResidueMatrix acc = ResidueMatrix::identity(s.modulus);
    for (const Letter& l : w) {
      const ResidueMatrix& g = report.generator_images[static_cast<std::size_t>(l.gen)];
      acc = acc.mul(l.exp > 0 ? g : g.inverse());
    }
    bool ok = acc.is_scalar();
    report.relator_scalar.push_back(ok);
    if (!ok) report.all_scalar = false;
  }

  std::vector<ResidueMatrix> mod_q;
  mod_q.reserve(report.generator_images.size());
  for (const auto& g : report.generator_images) mod_q.push_back(g.reduced(q));
  auto order = closure_order(mod_q, /*projectivize=*/true, cap);
  if (!order) raise(Errc::cap_exceeded, "congruence image closure exceeded the cap");
  report.image_order = *order;
  return report;
}

std::string CongruenceReport::summary() const {
  std::ostringstream out;
  std::size_t ok = 0;
  for (bool b : relator_scalar) ok += b ? 1 : 0;
  out << ok << "/" << relator_scalar.size() << " relators map to scalar matrices mod "
      << q << "^" << r << "; projectivized image order mod " << q << " = " << image_order;
  return out.str();
}

}  // namespace hurwitz
