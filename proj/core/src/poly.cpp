#include "schwarzian/poly.hpp"

#include <sstream>

namespace schwarzian {

Poly Poly::monomial(int degree, const Rational& coeff) {
  Poly p;
  if (coeff.is_zero()) return p;
  p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
  p.c_.back() = coeff;
  return p;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  // Integer convolution with one shared denominator per factor; far cheaper
  // than accumulating canonicalized rationals term by term.
  Integer da = 1, db = 1;
  for (const Rational& c : a.c_) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), c.denominator().get_mpz_t());
  for (const Rational& c : b.c_) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<Integer> ia(a.c_.size()), ib(b.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) ia[i] = a.c_[i].numerator() * (da / a.c_[i].denominator());
  for (size_t i = 0; i < b.c_.size(); ++i) ib[i] = b.c_[i].numerator() * (db / b.c_[i].denominator());
  std::vector<Integer> conv(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (size_t j = 0; j < ib.size(); ++j)
      mpz_addmul(conv[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
  }
  const Integer den = da * db;
  r.c_.reserve(conv.size());
  for (Integer& c : conv) r.c_.emplace_back(c, den);
  r.trim();
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  Poly r;
  if (s.is_zero() || is_zero()) return r;
  r.c_ = c_;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
  r.trim();
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

double Poly::eval(double x) const {
  double r = 0.0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].to_double();
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  Poly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * inner + Poly(c_[i]);
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(static_cast<size_t>(degree() - dd) + 1, Rational(0));
  const Rational lead_inv = divisor.leading().inverse();
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational factor = rem[static_cast<size_t>(k + dd)] * lead_inv;
    if (factor.is_zero()) continue;
    quot[static_cast<size_t>(k)] = factor;
    for (int j = 0; j < dd; ++j)
      rem[static_cast<size_t>(k + j)] -= factor * divisor.c_[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

namespace {

using ZPoly = std::vector<Integer>;  // ascending, no trailing zeros

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Clears denominators; the result is an integer multiple of p.
ZPoly clear_denominators(const Poly& p) {
  Integer lcm = 1;
  for (const Rational& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) out.push_back(c.numerator() * (lcm / c.denominator()));
  return out;
}

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const Integer& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void zdivide(ZPoly& p, const Integer& d) {
  for (Integer& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

ZPoly zprimitive(ZPoly p) {
  ztrim(p);
  if (p.empty()) return p;
  Integer c = zcontent(p);
  if (c != 1) zdivide(p, c);
  return p;
}

// Pseudo-remainder: exactly lc(b)^(deg a − deg b + 1)·a mod b, all over Z.
// The trailing multiplications keep the power exact even when intermediate
// degrees drop by more than one.
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  const Integer& lead = b.back();
  long remaining = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
  while (!a.empty() && a.size() >= b.size()) {
    const size_t shift = a.size() - b.size();
    ZPoly next(a.size() - 1, Integer(0));
    // next = lead·a − a_top·x^shift·b, dropping the cancelled top term.
    const Integer top = a.back();
    for (size_t i = 0; i + 1 < a.size(); ++i) next[i] = lead * a[i];
    for (size_t i = 0; i < db; ++i) next[shift + i] -= top * b[i];
    a = std::move(next);
    ztrim(a);
    --remaining;
  }
  for (; remaining > 0; --remaining)
    for (Integer& c : a) c *= lead;
  return a;
}

// --- modular gcd machinery -------------------------------------------------

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 base, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, base = mulmod(base, base, p))
    if (e & 1) r = mulmod(r, base, p);
  return r;
}

// Deterministic Miller–Rabin, valid for all 64-bit inputs with this witness set.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % s == 0) return n == s;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

const std::vector<u64>& gcd_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (u64 n = (1ULL << 61) - 1; out.size() < 16; n -= 2)
      if (is_prime_u64(n)) out.push_back(n);
    return out;
  }();
  return primes;
}

// Image of p modulo a word prime; empty result means the zero image.
std::vector<u64> reduce_mod(const ZPoly& p, u64 prime) {
  std::vector<u64> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = mpz_fdiv_ui(p[i].get_mpz_t(), prime);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Monic gcd over GF(prime).
std::vector<u64> gcd_mod(std::vector<u64> fa, std::vector<u64> fb, u64 prime) {
  if (fa.size() < fb.size()) std::swap(fa, fb);
  while (!fb.empty()) {
    const u64 inv = powmod(fb.back(), prime - 2, prime);
    while (fa.size() >= fb.size()) {
      const size_t shift = fa.size() - fb.size();
      const u64 factor = mulmod(fa.back(), inv, prime);
      for (size_t i = 0; i < fb.size(); ++i) {
        const u64 sub = mulmod(factor, fb[i], prime);
        u64& slot = fa[shift + i];
        slot = (slot >= sub) ? slot - sub : slot + prime - sub;
      }
      while (!fa.empty() && fa.back() == 0) fa.pop_back();
      if (fa.empty()) break;
    }
    std::swap(fa, fb);
  }
  const u64 inv = powmod(fa.back(), prime - 2, prime);
  for (u64& c : fa) c = mulmod(c, inv, prime);
  return fa;
}

// Does the primitive candidate divide a exactly? (Gauss: over Z iff over Q.)
// In-place integer trial division with early exit.
bool zdivides(const ZPoly& candidate, const ZPoly& a) {
  if (candidate.size() > a.size()) return false;
  ZPoly rem = a;
  const size_t dc = candidate.size() - 1;
  const Integer& lead = candidate.back();
  for (size_t k = a.size() - candidate.size() + 1; k-- > 0;) {
    Integer& top = rem[k + dc];
    if (top == 0) continue;
    Integer factor, residue;
    mpz_tdiv_qr(factor.get_mpz_t(), residue.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (residue != 0) return false;
    for (size_t j = 0; j < dc; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), factor.get_mpz_t(), candidate[j].get_mpz_t());
    top = 0;
  }
  for (size_t j = 0; j < dc; ++j)
    if (rem[j] != 0) return false;
  return true;
}

// Brown-style modular gcd of primitive integer polynomials with a subresultant
// fallback for the (unlucky) case where no prime verifies.
ZPoly zgcd_modular(const ZPoly& pa, const ZPoly& pb) {
  Integer glc;
  mpz_gcd(glc.get_mpz_t(), pa.back().get_mpz_t(), pb.back().get_mpz_t());

  Integer modulus = 0;
  ZPoly lifted;
  size_t best_size = pa.size() + 1;
  for (u64 prime : gcd_primes()) {
    const std::vector<u64> fa = reduce_mod(pa, prime);
    const std::vector<u64> fb = reduce_mod(pb, prime);
    if (fa.size() != pa.size() || fb.size() != pb.size()) continue;  // lc vanished
    std::vector<u64> image = gcd_mod(fa, fb, prime);
    if (image.size() == 1) return {Integer(1)};

    // Normalize the image to leading coefficient glc before lifting.
    const u64 scale = mpz_fdiv_ui(glc.get_mpz_t(), prime);
    for (u64& c : image) c = mulmod(c, scale, prime);

    if (image.size() < best_size) {
      // Fresh (smaller-degree) image discards previous unlucky lifts.
      best_size = image.size();
      modulus = Integer(static_cast<unsigned long>(prime));
      lifted.assign(image.size(), Integer(0));
      const Integer half = modulus / 2;
      for (size_t i = 0; i < image.size(); ++i) {
        Integer v(static_cast<unsigned long>(image[i]));
        if (v > half) v -= modulus;
        lifted[i] = v;
      }
    } else if (image.size() > best_size) {
      continue;  // unlucky prime
    } else {
      // CRT combine into the symmetric range.
      const Integer p_int(static_cast<unsigned long>(prime));
      const Integer combined = modulus * p_int;
      Integer m_inv;
      mpz_invert(m_inv.get_mpz_t(), modulus.get_mpz_t(), p_int.get_mpz_t());
      const Integer half = combined / 2;
      for (size_t i = 0; i < lifted.size(); ++i) {
        const u64 cur = mpz_fdiv_ui(lifted[i].get_mpz_t(), prime);
        const u64 want = image[i];
        const u64 delta = want >= cur ? want - cur : want + prime - cur;
        Integer t = Integer(static_cast<unsigned long>(delta)) * m_inv % p_int;
        lifted[i] += modulus * t;
        lifted[i] %= combined;
        if (lifted[i] > half) lifted[i] -= combined;
        else if (lifted[i] < -half) lifted[i] += combined;
      }
      modulus = combined;
    }

    ZPoly candidate = zprimitive(lifted);
    if (!candidate.empty() && zdivides(candidate, pa) && zdivides(candidate, pb))
      return candidate;
  }
  return {};  // no verified lift; caller falls back to the PRS
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();

  ZPoly pa = clear_denominators(a);
  ZPoly pb = clear_denominators(b);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  if (pb.size() == 1) return Poly(Rational(1));

  {
    // Content of the inputs is irrelevant for the monic gcd; only the lifted
    // candidate needs to be primitive (Gauss's lemma covers the division test).
    const ZPoly modular = zgcd_modular(pa, pb);
    if (!modular.empty()) {
      std::vector<Rational> coeffs;
      coeffs.reserve(modular.size());
      for (const Integer& c : modular) coeffs.emplace_back(c, Integer(1));
      return Poly(std::move(coeffs)).monic();
    }
  }

  // Subresultant PRS over Z: slower, but immune to unlucky primes.
  pa = zprimitive(std::move(pa));
  pb = zprimitive(std::move(pb));

  Integer g = 1, h = 1;
  for (;;) {
    const long delta = static_cast<long>(pa.size()) - static_cast<long>(pb.size());
    ZPoly rem = zpseudo_rem(pa, pb);
    if (rem.empty()) break;
    if (rem.size() == 1) {
      pb = {Integer(1)};
      break;
    }
    pa = std::move(pb);
    pb = std::move(rem);
    Integer divisor = g;
    for (long i = 0; i < delta; ++i) divisor *= h;
    zdivide(pb, divisor);
    g = pa.back();
    if (delta > 0) {
      Integer gd = 1;
      for (long i = 0; i < delta; ++i) gd *= g;
      Integer hd = 1;
      for (long i = 0; i + 1 < delta; ++i) hd *= h;
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
    }
  }

  ZPoly result = zprimitive(std::move(pb));
  std::vector<Rational> coeffs;
  coeffs.reserve(result.size());
  for (const Integer& c : result) coeffs.emplace_back(c, Integer(1));
  return Poly(std::move(coeffs)).monic();
}

namespace {

int sign_at(const Poly& p, const Rational& x) { return p.eval(x).sign(); }

// Sign variations of the Sturm chain of p at x.
int sturm_variations(const std::vector<Poly>& chain, const Rational& x) {
  int variations = 0, prev = 0;
  for (const Poly& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

int Poly::count_real_roots_in(const Rational& lo, const Rational& hi) const {
  if (is_zero()) throw DivisionByZero("root count of the zero polynomial");
  if (is_constant()) return 0;
  if (hi < lo) return count_real_roots_in(hi, lo);

  // Square-free part keeps root locations and makes the Sturm count exact.
  Poly p = *this / Poly::gcd(*this, derivative());

  // Peel off endpoint roots so the chain is evaluated away from zeros of p.
  int count = 0;
  if (p.eval(lo).is_zero()) {
    ++count;
    p = p / Poly(std::vector<Rational>{-lo, Rational(1)});
  }
  if (!(lo == hi) && p.eval(hi).is_zero()) {
    ++count;
    p = p / Poly(std::vector<Rational>{-hi, Rational(1)});
  }
  if (lo == hi || p.is_constant()) return count;

  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Poly next = -(chain[chain.size() - 2] % chain.back());
    chain.push_back(std::move(next));
  }
  chain.pop_back();

  const int open_count = sturm_variations(chain, lo) - sturm_variations(chain, hi);
  return count + std::max(open_count, 0);
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a.sign() < 0 ? " - " : " + ");
      a = a.abs();
    }
    const bool unit = (a == Rational(1));
    if (i == 0) {
      out << a.to_string();
    } else {
      if (!unit) out << a.to_string() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace schwarzian
