#include "gl3/oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

#include "gl3/support.hpp"

namespace gl3::oracle {

namespace {

using ull = unsigned long long;

bool is_prime(long long x) {
  if (x < 2) return false;
  for (long long d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// p^e reduced into the ring (0 once e >= n)
ull ring_pow(const ResidueRing& R, int e) {
  if (e >= R.n) return 0;
  return static_cast<ull>(ipow(R.p, e));
}

int valuation(ull x, const ResidueRing& R) {
  if (x == 0) return R.n;
  int v = 0;
  while (x % static_cast<ull>(R.p) == 0) {
    x /= static_cast<ull>(R.p);
    ++v;
  }
  return v;
}

ull norm_mod(long long x, long long m) {
  long long r = x % m;
  if (r < 0) r += m;
  return static_cast<ull>(r);
}

}  // namespace

ResidueRing::ResidueRing(long long p_, int n_) : p(p_), n(n_) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("ResidueRing: p must be a prime >= 5");
  if (n < 1) throw std::invalid_argument("ResidueRing: n must be >= 1");
  mod = ipow(p, n);
}

Mat3 mat_identity() {
  Mat3 m;
  m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = 1;
  return m;
}

Mat3 mat_mul(const ResidueRing& R, const Mat3& A, const Mat3& B) {
  Mat3 C;
  const ull m = static_cast<ull>(R.mod);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ull s = 0;
      for (int k = 0; k < 3; ++k) s += A.at(i, k) * B.at(k, j) % m;
      C.at(i, j) = s % m;
    }
  return C;
}

ull mat_det(const ResidueRing& R, const Mat3& A) {
  const long long m = R.mod;
  long long d = 0;
  d += static_cast<long long>(A.at(0, 0)) *
       norm_mod(static_cast<long long>(A.at(1, 1) * A.at(2, 2) % static_cast<ull>(m)) -
                    static_cast<long long>(A.at(1, 2) * A.at(2, 1) % static_cast<ull>(m)),
                m) % m;
  d -= static_cast<long long>(A.at(0, 1)) *
       norm_mod(static_cast<long long>(A.at(1, 0) * A.at(2, 2) % static_cast<ull>(m)) -
                    static_cast<long long>(A.at(1, 2) * A.at(2, 0) % static_cast<ull>(m)),
                m) % m;
  d += static_cast<long long>(A.at(0, 2)) *
       norm_mod(static_cast<long long>(A.at(1, 0) * A.at(2, 1) % static_cast<ull>(m)) -
                    static_cast<long long>(A.at(1, 1) * A.at(2, 0) % static_cast<ull>(m)),
                m) % m;
  return norm_mod(d, m);
}

bool mat_invertible(const ResidueRing& R, const Mat3& A) {
  return mat_det(R, A) % static_cast<ull>(R.p) != 0;
}

long long mod_pow(long long base, long long exp, long long mod) {
  long long r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

long long unit_inverse(long long x, long long mod) {
  long long a = norm_mod(x, mod), b = mod;
  long long u = 1, v = 0;
  while (b != 0) {
    long long q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) throw std::invalid_argument("unit_inverse: not a unit");
  return static_cast<long long>(norm_mod(u, mod));
}

Mat3 mat_inverse(const ResidueRing& R, const Mat3& A) {
  const long long m = R.mod;
  long long det = static_cast<long long>(mat_det(R, A));
  long long dinv = unit_inverse(det, m);
  auto minor2 = [&](int r0, int r1, int c0, int c1) -> long long {
    long long x = static_cast<long long>(A.at(r0, c0) * A.at(r1, c1) % static_cast<ull>(m)) -
                  static_cast<long long>(A.at(r0, c1) * A.at(r1, c0) % static_cast<ull>(m));
    return static_cast<long long>(norm_mod(x, m));
  };
  Mat3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      if (r0 > r1) std::swap(r0, r1);
      if (c0 > c1) std::swap(c0, c1);
      long long cof = minor2(r0, r1, c0, c1);
      if ((i + j) % 2 == 1) cof = m - cof;
      inv.at(j, i) = norm_mod(cof % m * dinv, m);
    }
  return inv;
}

long long primitive_root(long long p, int n) {
  long long mod = ipow(p, n);
  long long phi = ipow(p, n - 1) * (p - 1);
  std::vector<long long> prime_factors;
  if (n >= 2) prime_factors.push_back(p);
  long long rest = p - 1;
  for (long long d = 2; d * d <= rest; ++d)
    if (rest % d == 0) {
      prime_factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  if (rest > 1) prime_factors.push_back(rest);
  for (long long g = 2; g < mod; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (long long f : prime_factors)
      if (mod_pow(g, phi / f, mod) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

int pattern_exponent(const Triple& t, int r, int c) {
  if (r == 1 && c == 0) return t.c1;
  if (r == 2 && c == 0) return t.c3;
  if (r == 2 && c == 1) return t.c2;
  return 0;
}

bool in_subgroup(const ResidueRing& R, const Mat3& g, const Triple& t) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int e = std::min(pattern_exponent(t, r, c), R.n);
      if (e > 0 && g.at(r, c) % static_cast<ull>(ipow(R.p, e)) != 0) return false;
    }
  return mat_invertible(R, g);
}

Int group_order(const ResidueRing& R) {
  Int p = R.p;
  Int gl3 = (p * p * p - 1) * (p * p * p - p) * (p * p * p - p * p);
  Int lift = 1;
  for (int i = 0; i < 9 * (R.n - 1); ++i) lift *= p;
  return gl3 * lift;
}

Int subgroup_order(const ResidueRing& R, const Triple& t) {
  const long long p = R.p;
  // residue count mod p, by direct enumeration of the pattern
  std::array<int, 9> free_pos{};
  int nfree = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (std::min(pattern_exponent(t, r, c), 1) == 0) free_pos[static_cast<size_t>(nfree++)] = 3 * r + c;
  ResidueRing Rp(p, 1);
  long long residues = 0;
  long long total = ipow(p, nfree);
  for (long long code = 0; code < total; ++code) {
    Mat3 g;
    long long x = code;
    for (int i = 0; i < nfree; ++i) {
      g.e[static_cast<size_t>(free_pos[static_cast<size_t>(i)])] = static_cast<ull>(x % p);
      x /= p;
    }
    if (mat_invertible(Rp, g)) ++residues;
  }
  Int order = residues;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int e = std::min(pattern_exponent(t, r, c), R.n);
      int lift = e >= 1 ? R.n - e : R.n - 1;
      for (int i = 0; i < lift; ++i) order *= p;
    }
  return order;
}

namespace {

Mat3 elementary(const ResidueRing& R, int r, int c, ull v) {
  Mat3 m = mat_identity();
  m.at(r, c) = v % static_cast<ull>(R.mod);
  return m;
}

}  // namespace

std::vector<Mat3> subgroup_generators(const ResidueRing& R, const Triple& t) {
  std::vector<Mat3> gens;
  gens.push_back(elementary(R, 0, 1, 1));
  gens.push_back(elementary(R, 0, 2, 1));
  gens.push_back(elementary(R, 1, 2, 1));
  for (auto [r, c] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{2, 1}}) {
    ull v = ring_pow(R, pattern_exponent(t, r, c));
    if (v != 0) gens.push_back(elementary(R, r, c, v));
  }
  long long g0 = primitive_root(R.p, R.n);
  for (int i = 0; i < 3; ++i) {
    Mat3 d = mat_identity();
    d.at(i, i) = static_cast<ull>(g0);
    gens.push_back(d);
  }
  if (t.c1 == 0) {
    Mat3 s1;
    s1.at(0, 1) = s1.at(1, 0) = s1.at(2, 2) = 1;
    gens.push_back(s1);
  }
  if (t.c2 == 0) {
    Mat3 s2;
    s2.at(0, 0) = s2.at(1, 2) = s2.at(2, 1) = 1;
    gens.push_back(s2);
  }
  return gens;
}

CharSpec build_characters(long long p, int M, int N) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("build_characters: bad p");
  if (M < 0 || N < 1 || M > N) throw std::invalid_argument("build_characters: bad (M,N)");
  CharSpec s;
  s.p = p;
  s.M = M;
  s.N = N;
  s.pN = ipow(p, N);
  s.order = ipow(p, N - 1) * (p - 1);
  s.generator = primitive_root(p, N);
  s.dlog.assign(static_cast<size_t>(s.pN), -1);
  long long x = 1;
  for (long long i = 0; i < s.order; ++i) {
    s.dlog[static_cast<size_t>(x)] = i;
    x = x * s.generator % s.pN;
  }
  s.e3 = 1;
  s.e2 = M == 0 ? 0 : (M == N ? 2 : ipow(p, N - M));
  if (conductor_of_exponent(s, s.e3) != N)
    throw std::logic_error("build_characters: cond(chi3) != N");
  if (conductor_of_exponent(s, s.e2) != M)
    throw std::logic_error("build_characters: cond(chi2) != M");
  if (conductor_of_exponent(s, s.e2 - s.e3) != N)
    throw std::logic_error("build_characters: cond(chi2/chi3) != N");
  return s;
}

int conductor_of_exponent(const CharSpec& spec, long long e) {
  e = static_cast<long long>(norm_mod(e, spec.order));
  if (e == 0) return 0;
  for (int t = 0; t <= spec.N; ++t) {
    bool trivial = true;
    if (t == 0) {
      for (long long x = 1; x < spec.pN && trivial; ++x) {
        if (x % spec.p == 0) continue;
        if (e * spec.dlog[static_cast<size_t>(x)] % spec.order != 0) trivial = false;
      }
    } else {
      long long step = ipow(spec.p, t);
      for (long long k = 0; k * step < spec.pN && trivial; ++k) {
        long long x = (1 + k * step) % spec.pN;
        if (e * spec.dlog[static_cast<size_t>(x)] % spec.order != 0) trivial = false;
      }
    }
    if (trivial) return t;
  }
  return spec.N;
}

long long chi_exponent(const Mat3& g, const Triple& c, const CharSpec& spec,
                       const ResidueRing& R) {
  if (R.p != spec.p || R.n < spec.N)
    throw std::invalid_argument("chi_exponent: ring level below conductor");
  Triple m{spec.M, spec.N, spec.N};
  if (!in_Tm(c, m))
    throw std::invalid_argument("chi_exponent: c not above the base point");
  if (!in_subgroup(R, g, c)) throw std::invalid_argument("chi_exponent: g not in C_c");
  long long exp = 0;
  if (spec.e2 != 0) {
    long long d = spec.dlog[static_cast<size_t>(g.at(1, 1) % static_cast<ull>(spec.pN))];
    if (d < 0) throw std::invalid_argument("chi_exponent: (2,2) entry not a unit");
    exp += spec.e2 % spec.order * d;
  }
  long long d3 = spec.dlog[static_cast<size_t>(g.at(2, 2) % static_cast<ull>(spec.pN))];
  if (d3 < 0) throw std::invalid_argument("chi_exponent: (3,3) entry not a unit");
  exp += spec.e3 % spec.order * d3;
  return static_cast<long long>(norm_mod(exp, spec.order));
}

// ---------------------------------------------------------------------------
// Coset labels: Howell canonical form of the column modules g L1, g L2.

namespace {

using Vec3 = std::array<ull, 3>;

Vec3 vec_scale(const ResidueRing& R, const Vec3& v, ull s) {
  const ull m = static_cast<ull>(R.mod);
  return {v[0] * (s % m) % m, v[1] * (s % m) % m, v[2] * (s % m) % m};
}

Vec3 vec_sub_scaled(const ResidueRing& R, const Vec3& v, const Vec3& w, ull q) {
  const ull m = static_cast<ull>(R.mod);
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[static_cast<size_t>(i)] =
      (v[static_cast<size_t>(i)] + (m - w[static_cast<size_t>(i)] * (q % m) % m)) % m;
  return r;
}

// Canonical generating vectors of the span of `pool` over Z/p^n.  Echelon
// with minimal-valuation pivots normalized to p^v, saturation rows to carry
// the zero-divisor spans, and reduction of entries above each pivot.
std::array<Vec3, 3> howell3(const ResidueRing& R, std::vector<Vec3> pool) {
  std::array<Vec3, 3> piv{};
  std::array<bool, 3> have{};
  std::array<int, 3> pval{};
  for (size_t idx = 0; idx < pool.size(); ++idx) {
    Vec3 v = pool[idx];
    int pos = 0;
    while (pos < 3) {
      if (v[static_cast<size_t>(pos)] == 0) {
        ++pos;
        continue;
      }
      int vv = valuation(v[static_cast<size_t>(pos)], R);
      ull pvv = ring_pow(R, vv);
      if (!have[static_cast<size_t>(pos)]) {
        ull unit = v[static_cast<size_t>(pos)] / pvv;
        v = vec_scale(R, v, static_cast<ull>(unit_inverse(static_cast<long long>(unit), R.mod)));
        piv[static_cast<size_t>(pos)] = v;
        have[static_cast<size_t>(pos)] = true;
        pval[static_cast<size_t>(pos)] = vv;
        if (vv > 0) pool.push_back(vec_scale(R, v, ring_pow(R, R.n - vv)));
        break;
      }
      if (vv < pval[static_cast<size_t>(pos)]) {
        std::swap(v, piv[static_cast<size_t>(pos)]);
        ull unit = piv[static_cast<size_t>(pos)][static_cast<size_t>(pos)] / pvv;
        piv[static_cast<size_t>(pos)] = vec_scale(
            R, piv[static_cast<size_t>(pos)],
            static_cast<ull>(unit_inverse(static_cast<long long>(unit), R.mod)));
        pval[static_cast<size_t>(pos)] = vv;
        pool.push_back(vec_scale(R, piv[static_cast<size_t>(pos)], ring_pow(R, R.n - vv)));
        if (v[static_cast<size_t>(pos)] == 0) {
          ++pos;
          continue;
        }
      }
      ull q = v[static_cast<size_t>(pos)] / ring_pow(R, pval[static_cast<size_t>(pos)]);
      v = vec_sub_scaled(R, v, piv[static_cast<size_t>(pos)], q);
    }
  }
  for (int pos = 0; pos < 3; ++pos) {
    if (!have[static_cast<size_t>(pos)]) continue;
    ull pv = ring_pow(R, pval[static_cast<size_t>(pos)]);
    for (int r = 0; r < pos; ++r) {
      if (!have[static_cast<size_t>(r)]) continue;
      ull q = piv[static_cast<size_t>(r)][static_cast<size_t>(pos)] / pv;
      if (q) piv[static_cast<size_t>(r)] =
          vec_sub_scaled(R, piv[static_cast<size_t>(r)], piv[static_cast<size_t>(pos)], q);
    }
  }
  return piv;
}

std::array<Vec3, 3> column_module_form(const ResidueRing& R, const Mat3& g,
                                       int e2, int e3) {
  // columns of g * diag(1, p^e2, p^e3)
  ull s2 = ring_pow(R, e2), s3 = ring_pow(R, e3);
  const ull m = static_cast<ull>(R.mod);
  std::vector<Vec3> cols(3);
  for (int i = 0; i < 3; ++i) {
    cols[0][static_cast<size_t>(i)] = g.at(i, 0);
    cols[1][static_cast<size_t>(i)] = g.at(i, 1) * s2 % m;
    cols[2][static_cast<size_t>(i)] = g.at(i, 2) * s3 % m;
  }
  return howell3(R, cols);
}

}  // namespace

CosetLabel coset_label(const ResidueRing& R, const Mat3& g, const Triple& d) {
  if (R.mod > 65535) throw std::invalid_argument("coset_label: modulus too large");
  auto h1 = column_module_form(R, g, std::min(d.c1, R.n), std::min(d.c3, R.n));
  auto h2 = column_module_form(R, g, 0, std::min(d.c2, R.n));
  CosetLabel lab{};
  int k = 0;
  for (const auto& h : {h1, h2})
    for (const auto& row : h)
      for (ull x : row) lab[static_cast<size_t>(k++)] = static_cast<uint16_t>(x);
  return lab;
}

CosetSpace enumerate_cosets(const ResidueRing& R, const Triple& d, long long ceiling) {
  if (d.c3 > R.n)
    throw std::invalid_argument("enumerate_cosets: level below d3");
  std::vector<Mat3> gens = subgroup_generators(R, {0, 0, 0});
  CosetSpace S;
  Mat3 id = mat_identity();
  S.index_of[coset_label(R, id, d)] = 0;
  S.reps.push_back(id);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    Mat3 g = S.reps[static_cast<size_t>(queue.front())];
    queue.pop_front();
    for (const Mat3& s : gens) {
      Mat3 h = mat_mul(R, s, g);
      CosetLabel lab = coset_label(R, h, d);
      auto [it, inserted] = S.index_of.emplace(lab, static_cast<int>(S.reps.size()));
      if (inserted) {
        if (static_cast<long long>(S.reps.size()) >= ceiling)
          throw std::runtime_error("enumerate_cosets: coset index exceeds ceiling");
        S.reps.push_back(h);
        queue.push_back(it->second);
      }
    }
  }
  return S;
}

OrbitData double_coset_orbits(const ResidueRing& R, const Triple& c,
                              const Triple& d, long long ceiling) {
  if (c.c3 > R.n || d.c3 > R.n)
    throw std::invalid_argument("double_coset_orbits: level below c3/d3");
  CosetSpace space = enumerate_cosets(R, d, ceiling);
  std::vector<Mat3> cgens = subgroup_generators(R, c);
  OrbitData out;
  out.coset_count = static_cast<long long>(space.reps.size());
  for (const auto& [start, start_idx] : space.index_of) {
    if (out.orbit_of.count(start)) continue;
    int orbit = static_cast<int>(out.reps.size());
    out.reps.push_back(space.reps[static_cast<size_t>(start_idx)]);
    long long size = 0;
    std::deque<Mat3> queue{space.reps[static_cast<size_t>(start_idx)]};
    out.orbit_of[start] = orbit;
    while (!queue.empty()) {
      Mat3 g = queue.front();
      queue.pop_front();
      ++size;
      for (const Mat3& s : cgens) {
        Mat3 h = mat_mul(R, s, g);
        CosetLabel lab = coset_label(R, h, d);
        if (!out.orbit_of.count(lab)) {
          out.orbit_of[lab] = orbit;
          queue.push_back(h);
        }
      }
    }
    out.orbit_sizes.push_back(size);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mackey support counting.

namespace {

// value lists per matrix entry (linear position) for streaming C_c
struct Stream {
  std::array<std::vector<ull>, 9> vals;
  long long total = 1;
  bool unit_diag = false;
};

Stream subgroup_stream(const ResidueRing& R, const Triple& c) {
  Stream s;
  s.unit_diag = dominated_by({1, 1, 1}, c);
  for (int r = 0; r < 3; ++r)
    for (int col = 0; col < 3; ++col) {
      std::vector<ull>& v = s.vals[static_cast<size_t>(3 * r + col)];
      int e = std::min(pattern_exponent(c, r, col), R.n);
      if (e > 0) {
        ull step = ring_pow(R, e);
        if (step == 0)
          v.push_back(0);
        else
          for (ull x = 0; x < static_cast<ull>(R.mod); x += step) v.push_back(x);
      } else if (r == col && s.unit_diag) {
        for (ull x = 1; x < static_cast<ull>(R.mod); ++x)
          if (x % static_cast<ull>(R.p) != 0) v.push_back(x);
      } else {
        for (ull x = 0; x < static_cast<ull>(R.mod); ++x) v.push_back(x);
      }
      s.total *= static_cast<long long>(v.size());
    }
  return s;
}

// exact streaming of chi_c(h) = chi_d(k^-1 h k) over the intersection
struct ExactScan {
  const ResidueRing& R;
  const CharSpec& spec;
  Stream stream;
  // order: constrained lower entries, then diagonal, then free uppers;
  // the final slot (1,2) runs over the full ring for the incremental loop
  static constexpr std::array<int, 9> kOrder{3, 6, 7, 0, 4, 8, 1, 2, 5};
  std::array<std::array<ull, 5>, 9> B{};  // contribution of each entry to tracked coords
  ull pd1 = 1, pd3 = 1, pd2 = 1;
  bool e2_active = false;
  std::array<ull, 9> hv{};
  bool violation = false;

  ExactScan(const ResidueRing& R_, const CharSpec& spec_, const Triple& c,
            const Triple& d, const Mat3& k)
      : R(R_), spec(spec_), stream(subgroup_stream(R_, c)) {
    Mat3 kinv = mat_inverse(R, k);
    // tracked coordinates of u = kinv h k: (1,0),(2,0),(2,1),(1,1),(2,2)
    constexpr std::array<std::pair<int, int>, 5> kTracked{
        std::pair{1, 0}, {2, 0}, {2, 1}, {1, 1}, {2, 2}};
    const ull m = static_cast<ull>(R.mod);
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col)
        for (int t = 0; t < 5; ++t) {
          auto [ti, tj] = kTracked[static_cast<size_t>(t)];
          B[static_cast<size_t>(3 * r + col)][static_cast<size_t>(t)] =
              kinv.at(ti, r) * k.at(col, tj) % m;
        }
    pd1 = std::max<ull>(1, ring_pow(R, std::min(d.c1, R.n)));
    pd3 = std::max<ull>(1, ring_pow(R, std::min(d.c3, R.n)));
    pd2 = std::max<ull>(1, ring_pow(R, std::min(d.c2, R.n)));
    if (ring_pow(R, std::min(d.c1, R.n)) == 0) pd1 = static_cast<ull>(R.mod);
    if (ring_pow(R, std::min(d.c3, R.n)) == 0) pd3 = static_cast<ull>(R.mod);
    if (ring_pow(R, std::min(d.c2, R.n)) == 0) pd2 = static_cast<ull>(R.mod);
  }

  void leaf(const std::array<ull, 5>& u) {
    if (u[0] % pd1 || u[1] % pd3 || u[2] % pd2) return;
    if (!stream.unit_diag) {
      Mat3 h;
      h.e = hv;
      if (!mat_invertible(R, h)) return;
    }
    const ull pN = static_cast<ull>(spec.pN);
    long long lhs = spec.e3 * spec.dlog[static_cast<size_t>(hv[8] % pN)];
    long long rhs = spec.e3 * spec.dlog[static_cast<size_t>(u[4] % pN)];
    if (e2_active) {
      lhs += spec.e2 * spec.dlog[static_cast<size_t>(hv[4] % pN)];
      rhs += spec.e2 * spec.dlog[static_cast<size_t>(u[3] % pN)];
    }
    if ((lhs - rhs) % spec.order != 0) violation = true;
  }

  void rec(int depth, const std::array<ull, 5>& partial) {
    if (violation) return;
    const ull m = static_cast<ull>(R.mod);
    int pos = kOrder[static_cast<size_t>(depth)];
    const std::vector<ull>& vals = stream.vals[static_cast<size_t>(pos)];
    if (depth == 8) {
      // final slot is a full range starting at 0 with step 1
      std::array<ull, 5> u = partial;
      const auto& b = B[static_cast<size_t>(pos)];
      for (ull v = 0; v < static_cast<ull>(R.mod); ++v) {
        if (v != 0)
          for (int t = 0; t < 5; ++t) {
            u[static_cast<size_t>(t)] += b[static_cast<size_t>(t)];
            if (u[static_cast<size_t>(t)] >= m) u[static_cast<size_t>(t)] -= m;
          }
        hv[static_cast<size_t>(pos)] = v;
        leaf(u);
        if (violation) return;
      }
      return;
    }
    for (ull v : vals) {
      std::array<ull, 5> u = partial;
      for (int t = 0; t < 5; ++t)
        u[static_cast<size_t>(t)] =
            (u[static_cast<size_t>(t)] + v * B[static_cast<size_t>(pos)][static_cast<size_t>(t)]) % m;
      hv[static_cast<size_t>(pos)] = v;
      rec(depth + 1, u);
      if (violation) return;
    }
  }

  bool has_violation() {
    e2_active = spec.e2 != 0;
    violation = false;
    rec(0, {});
    return violation;
  }
};

Mat3 random_subgroup_element(const ResidueRing& R, const Triple& c,
                             std::mt19937_64& rng) {
  std::uniform_int_distribution<ull> full(0, static_cast<ull>(R.mod) - 1);
  while (true) {
    Mat3 g;
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) {
        int e = std::min(pattern_exponent(c, r, col), R.n);
        if (e > 0) {
          ull step = ring_pow(R, e);
          if (step == 0) {
            g.at(r, col) = 0;
          } else {
            ull count = static_cast<ull>(R.mod) / step;
            g.at(r, col) = step * (full(rng) % count);
          }
        } else {
          g.at(r, col) = full(rng);
        }
      }
    if (mat_invertible(R, g)) return g;
  }
}

}  // namespace

namespace {

void require_mackey_inputs(const ResidueRing& R, const Triple& c, const Triple& d,
                           const CharSpec& spec) {
  Triple m{spec.M, spec.N, spec.N};
  if (!in_Tm(c, m) || !in_Tm(d, m))
    throw std::invalid_argument("mackey support: pair not in T_m");
  if (R.n < spec.N)
    throw std::invalid_argument("mackey support: level below conductor");
}

bool exact_mode_for(const ResidueRing& R, const Triple& c, MackeyMode mode,
                    long long ceiling) {
  Stream probe = subgroup_stream(R, c);
  bool exact = mode == MackeyMode::Exact ||
               (mode == MackeyMode::Auto && probe.total <= ceiling);
  if (exact && probe.total > ceiling)
    throw std::runtime_error(
        "mackey support: exact stream exceeds ceiling; use sampled mode");
  return exact;
}

bool coset_supported_impl(const ResidueRing& R, const Triple& c, const Triple& d,
                          const CharSpec& spec, const Mat3& k, bool exact,
                          uint64_t seed, long long samples, long long* hits_out) {
  if (exact) {
    ExactScan scan(R, spec, c, d, k);
    if (hits_out) *hits_out = -1;
    return !scan.has_violation();
  }
  std::mt19937_64 rng(seed);
  Mat3 kinv = mat_inverse(R, k);
  long long hits = 0;
  bool supported = true;
  for (long long s = 0; s < samples && supported; ++s) {
    Mat3 h = random_subgroup_element(R, c, rng);
    Mat3 u = mat_mul(R, mat_mul(R, kinv, h), k);
    bool inside = true;
    for (auto [r2, c2] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{2, 1}}) {
      int e = std::min(pattern_exponent(d, r2, c2), R.n);
      if (e > 0 && u.at(r2, c2) % static_cast<ull>(ipow(R.p, e)) != 0) inside = false;
    }
    if (!inside) continue;
    ++hits;
    if (chi_exponent(h, c, spec, R) != chi_exponent(u, d, spec, R)) supported = false;
  }
  if (hits_out) *hits_out = hits;
  return supported;
}

}  // namespace

bool mackey_coset_supported(const ResidueRing& R, const Triple& c, const Triple& d,
                            const CharSpec& spec, const Mat3& k, MackeyMode mode,
                            uint64_t seed, long long samples, long long ceiling) {
  require_mackey_inputs(R, c, d, spec);
  if (!mat_invertible(R, k))
    throw std::invalid_argument("mackey_coset_supported: k not invertible");
  return coset_supported_impl(R, c, d, spec, k,
                              exact_mode_for(R, c, mode, ceiling), seed, samples,
                              nullptr);
}

MackeyResult mackey_support_count(const ResidueRing& R, const Triple& c,
                                  const Triple& d, const CharSpec& spec,
                                  MackeyMode mode, uint64_t seed,
                                  long long samples, long long ceiling) {
  require_mackey_inputs(R, c, d, spec);
  OrbitData orbits = double_coset_orbits(R, c, d);
  bool exact = exact_mode_for(R, c, mode, ceiling);

  MackeyResult res;
  res.sampled = !exact;
  for (size_t ri = 0; ri < orbits.reps.size(); ++ri) {
    long long hits = 0;
    bool supported =
        coset_supported_impl(R, c, d, spec, orbits.reps[ri], exact,
                             seed + 0x9e3779b97f4a7c15ULL * (ri + 1), samples, &hits);
    res.hits.push_back(hits);
    res.supported.push_back(supported);
    if (supported) ++res.support_count;
  }
  return res;
}

std::vector<std::pair<Triple, Triple>> default_pairs(const ConductorData& cd, int level) {
  std::vector<Triple> ts = enumerate_Tm(cd.m, TmBound::componentwise({level, level, level}));
  std::vector<std::pair<Triple, Triple>> pairs;
  for (const Triple& c : ts)
    for (const Triple& d : ts) pairs.emplace_back(c, d);
  return pairs;
}

VerifyReport verify_report(long long p, int level, const ConductorData& cd,
                           const std::vector<std::pair<Triple, Triple>>& pairs,
                           MackeyMode mode, uint64_t seed, long long samples,
                           long long ceiling) {
  ResidueRing R(p, level);
  CharSpec spec = build_characters(p, cd.M, cd.N);
  VerifyReport report;
  report.p = p;
  report.level = level;
  report.M = cd.M;
  report.N = cd.N;
  report.all_ok = true;

  std::set<Triple> seen;
  for (const auto& [c, d] : pairs) {
    seen.insert(c);
    seen.insert(d);
  }
  for (const Triple& t : seen) {
    IndexCheck ic;
    ic.c = t;
    ic.expected_index = poly_eval(dim_U(t, cd), p);
    ic.closed_form = group_order(R) / subgroup_order(R, t);
    ic.oracle_index = static_cast<long long>(enumerate_cosets(R, t, 1'000'000).reps.size());
    ic.ok = ic.expected_index == ic.oracle_index && ic.closed_form == ic.oracle_index;
    report.all_ok &= ic.ok;
    report.index_checks.push_back(std::move(ic));
  }

  for (const auto& [c, d] : pairs) {
    PairCheck pc;
    pc.c = c;
    pc.d = d;
    pc.expected_R = poly_eval(count_R(c, d), p);
    pc.expected_S = poly_eval(count_S(c, d, cd), p);
    OrbitData orbits = double_coset_orbits(R, c, d);
    pc.oracle_R = static_cast<long long>(orbits.reps.size());
    long long size_sum = 0;
    for (long long s : orbits.orbit_sizes) size_sum += s;
    MackeyResult mk = mackey_support_count(R, c, d, spec, mode, seed, samples, ceiling);
    pc.oracle_S = mk.support_count;
    pc.sampled = mk.sampled;
    if (mk.sampled)
      for (size_t i = 0; i < mk.hits.size(); ++i)
        if (mk.supported[i])
          pc.min_hits = pc.min_hits < 0 ? mk.hits[i] : std::min(pc.min_hits, mk.hits[i]);
    pc.ok = pc.expected_R == pc.oracle_R && pc.expected_S == pc.oracle_S &&
            size_sum == orbits.coset_count;
    report.all_ok &= pc.ok;
    report.pairs.push_back(std::move(pc));
  }
  return report;
}

std::vector<long long> x_class_values(const ResidueRing& R, const XClassLabel& label,
                                      const DepthPair& depth) {
  const long long p = R.p;
  std::vector<long long> out;
  if (!label.one_plus_pi) {
    if (depth.depth == 0) return {1};
    long long pk = ipow(p, depth.depth);
    for (long long u = 1; u < pk; ++u)
      if (u % p != 0) out.push_back(u);
    return out;
  }
  if (!label.val) return {1};
  int i = *label.val;
  if (i == 0) {
    if (depth.depth == 0) return {2};
    long long pk = ipow(p, depth.depth);
    for (long long u = 1; u < pk; ++u)
      if (u % p != 0 && (u - 1) % p != 0) out.push_back(u);
    return out;
  }
  int rest = label.precision - i;
  if (rest <= 0) return {1 + ipow(p, i)};
  long long pr = ipow(p, rest);
  for (long long u = 1; u < pr; ++u)
    if (u % p != 0) out.push_back(1 + ipow(p, i) * u);
  return out;
}

Mat3 rep_matrix(const ResidueRing& R, const CosetRep& rep, long long x) {
  Mat3 g;
  const ull m = static_cast<ull>(R.mod);
  switch (rep.family) {
    case Weyl::One:
      g.at(0, 0) = g.at(1, 1) = g.at(2, 2) = 1;
      g.at(1, 0) = ring_pow(R, rep.a.c1);
      g.at(2, 0) = norm_mod(x, R.mod) * ring_pow(R, rep.a.c3) % m;
      g.at(2, 1) = ring_pow(R, rep.a.c2);
      break;
    case Weyl::S1:
      g.at(0, 1) = g.at(1, 0) = g.at(2, 2) = 1;
      g.at(2, 0) = ring_pow(R, rep.beta);
      g.at(2, 1) = ring_pow(R, rep.alpha);
      break;
    case Weyl::S2:
      g.at(0, 0) = g.at(1, 2) = g.at(2, 1) = 1;
      g.at(1, 0) = ring_pow(R, rep.beta);
      g.at(2, 0) = ring_pow(R, rep.alpha);
      break;
    case Weyl::S1S2:
      g.at(0, 2) = g.at(1, 0) = g.at(2, 1) = 1;
      g.at(2, 0) = ring_pow(R, rep.alpha);
      break;
    case Weyl::S2S1:
      g.at(0, 1) = g.at(1, 2) = g.at(2, 0) = 1;
      g.at(1, 1) = ring_pow(R, rep.alpha);
      break;
    case Weyl::W0:
      g.at(0, 2) = g.at(1, 1) = g.at(2, 0) = 1;
      break;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Coset-pair coefficient identities.

namespace {

struct PairSampler {
  ResidueRing W;   // extended-precision working ring
  long long lvl;   // residues are compared mod p^level
  Mat3 k, kinv;
  Triple c, d;
  std::mt19937_64 rng;

  PairSampler(long long p, int level, int extra, const Triple& c_, const Triple& d_,
              const Mat3& rep, uint64_t seed)
      : W(p, level + extra), lvl(ipow(p, level)), k(rep), c(c_), d(d_), rng(seed) {
    kinv = mat_inverse(W, k);
  }

  // next coset pair (g, g') with g k = k g'; returns draws used
  std::pair<Mat3, Mat3> next(long long& draws) {
    while (true) {
      Mat3 g = random_subgroup_element(W, c, rng);
      ++draws;
      Mat3 gp = mat_mul(W, mat_mul(W, kinv, g), k);
      if (in_subgroup(W, gp, d)) return {g, gp};
    }
  }

  long long entry_div(const Mat3& g, int r, int cc, int e) const {
    return static_cast<long long>(g.at(r, cc)) / ipow(W.p, e);
  }

  bool congruent(long long a, long long b) const {
    return norm_mod(a - b, lvl) == 0;
  }
};

}  // namespace

RelationCheckResult relations_check_s1(long long p, int level, const Triple& c,
                                       const Triple& d, int alpha, int beta,
                                       long long target_pairs, uint64_t seed) {
  if (!in_T(c) || !in_T(d) || !dominated_by({1, 1, 1}, c) || !dominated_by({1, 1, 1}, d))
    throw std::invalid_argument("relations_check_s1: need c, d >= (1,1,1) in T");
  if (alpha < 1 || alpha > std::min(d.c2, c.c3) || beta < 1 ||
      beta > std::min(c.c2, d.c3) || beta - alpha < -c.c1 || beta - alpha > d.c1)
    throw std::invalid_argument("relations_check_s1: (alpha,beta) outside family bounds");

  int extra = std::max(alpha, beta);
  ResidueRing W0(p, level + extra);
  Mat3 rep = rep_matrix(W0, CosetRep::s1(alpha, beta));
  PairSampler ps(p, level, extra, c, d, rep, seed);
  const long long m = ps.W.mod;
  auto pw = [&](int e) { return ipow(p, e) % m; };

  auto pair_ok = [&](const Mat3& g, const Mat3& gp) {
    long long g22 = static_cast<long long>(g.at(1, 1)), g23 = static_cast<long long>(g.at(1, 2));
    long long g33 = static_cast<long long>(g.at(2, 2));
    long long h22 = static_cast<long long>(gp.at(1, 1)), h23 = static_cast<long long>(gp.at(1, 2));
    long long h33 = static_cast<long long>(gp.at(2, 2));
    long long gam21 = ps.entry_div(g, 1, 0, c.c1), gam32 = ps.entry_div(g, 2, 1, c.c2);
    long long gam31 = ps.entry_div(g, 2, 0, c.c3);
    long long gam21p = ps.entry_div(gp, 1, 0, d.c1), gam32p = ps.entry_div(gp, 2, 1, d.c2);
    long long gam31p = ps.entry_div(gp, 2, 0, d.c3);

    long long rhs1 = g33 - g23 % m * pw(beta) % m -
                     gam21p % m * pw(d.c1 + alpha - beta) % m +
                     gam32 % m * pw(c.c2 - beta) % m -
                     gam31p % m * pw(d.c3 - beta) % m;
    long long rhs2 = g33 - g23 % m * pw(beta) % m -
                     gam21 % m * pw(c.c1 + beta - alpha) % m -
                     gam32p % m * pw(d.c2 - alpha) % m +
                     gam31 % m * pw(c.c3 - alpha) % m;
    long long rhs3 = g33 - g23 % m * pw(beta) % m - h23 % m * pw(alpha) % m;
    return ps.congruent(g22, rhs1) && ps.congruent(h22, rhs2) &&
           ps.congruent(h33, rhs3);
  };

  RelationCheckResult out;
  out.ok = pair_ok(mat_identity(), mat_identity());
  ++out.pairs_checked;
  while (out.ok && out.pairs_checked < target_pairs) {
    auto [g, gp] = ps.next(out.draws);
    ++out.pairs_checked;
    out.ok = pair_ok(g, gp);
  }
  return out;
}

RelationCheckResult relations_check_t(long long p, int level, const Triple& c,
                                      const Triple& d, const Triple& a,
                                      long long target_pairs, uint64_t seed) {
  if (!in_T(c) || !in_T(d) || !dominated_by({1, 1, 1}, c) || !dominated_by({1, 1, 1}, d))
    throw std::invalid_argument("relations_check_t: need c, d >= (1,1,1) in T");
  std::vector<Triple> tcd = tcd_set(c, d);
  if (std::find(tcd.begin(), tcd.end(), a) == tcd.end())
    throw std::invalid_argument("relations_check_t: a not admissible for (c,d)");

  int extra = a.c3;
  ResidueRing W0(p, level + extra);
  std::mt19937_64 xrng(seed ^ 0x5bd1e995u);
  std::uniform_int_distribution<long long> xdist(1, W0.mod - 1);
  long long x = 1;
  do {
    x = xdist(xrng);
  } while (x % p == 0);
  Mat3 rep = rep_matrix(W0, CosetRep::t(a, {}), x);
  PairSampler ps(p, level, extra, c, d, rep, seed);
  const long long m = ps.W.mod;
  auto pw = [&](int e) { return ipow(p, e) % m; };
  long long rx = static_cast<long long>(norm_mod(pw(a.c1 + a.c2) - x % m * pw(a.c3), m));

  auto pair_ok = [&](const Mat3& g, const Mat3& gp) {
    long long g12 = static_cast<long long>(g.at(0, 1)), g13 = static_cast<long long>(g.at(0, 2));
    long long g23 = static_cast<long long>(g.at(1, 2));
    long long gam21 = ps.entry_div(g, 1, 0, c.c1), gam32 = ps.entry_div(g, 2, 1, c.c2);
    long long gam31 = ps.entry_div(g, 2, 0, c.c3);
    long long gam21p = ps.entry_div(gp, 1, 0, d.c1), gam32p = ps.entry_div(gp, 2, 1, d.c2);
    long long gam31p = ps.entry_div(gp, 2, 0, d.c3);

    long long lhs = (g12 % m * pw(a.c1) + g13 % m * pw(a.c1 + a.c2) % m +
                     m - g23 % m * pw(a.c2) % m) % m;
    lhs = lhs * (x % m) % m * rx % m;
    long long rhs = 0;
    rhs -= gam21 % m * (x % m) % m * pw(c.c1 + a.c2) % m;
    rhs -= gam21p % m * rx % m * pw(d.c1 + a.c2 - a.c3) % m;
    rhs += gam32 % m * rx % m * pw(a.c1 + c.c2 - a.c3) % m;
    rhs += gam32p % m * (x % m) % m * pw(a.c1 + d.c2) % m;
    rhs += gam31 % m * pw(c.c3 - a.c3 + a.c1 + a.c2) % m;
    rhs -= gam31p % m * pw(d.c3 - a.c3 + a.c1 + a.c2) % m;
    return ps.congruent(lhs, rhs);
  };

  RelationCheckResult out;
  out.ok = pair_ok(mat_identity(), mat_identity());
  ++out.pairs_checked;
  while (out.ok && out.pairs_checked < target_pairs) {
    auto [g, gp] = ps.next(out.draws);
    ++out.pairs_checked;
    out.ok = pair_ok(g, gp);
  }
  return out;
}

bool s1_relations_violated_by_corruption(long long p, int level, const Triple& c,
                                         const Triple& d, int alpha, int beta,
                                         uint64_t seed) {
  int extra = std::max(alpha, beta);
  ResidueRing W0(p, level + extra);
  Mat3 rep = rep_matrix(W0, CosetRep::s1(alpha, beta));
  PairSampler ps(p, level, extra, c, d, rep, seed);
  const long long m = ps.W.mod;
  auto pw = [&](int e) { return ipow(p, e) % m; };
  long long draws = 0;
  auto [g, gp] = ps.next(draws);
  gp.at(1, 0) = (gp.at(1, 0) + static_cast<ull>(p)) % static_cast<ull>(m);

  long long g22 = static_cast<long long>(g.at(1, 1)), g23 = static_cast<long long>(g.at(1, 2));
  long long g33 = static_cast<long long>(g.at(2, 2));
  long long h22 = static_cast<long long>(gp.at(1, 1)), h23 = static_cast<long long>(gp.at(1, 2));
  long long h33 = static_cast<long long>(gp.at(2, 2));
  long long gam21 = ps.entry_div(g, 1, 0, c.c1), gam32 = ps.entry_div(g, 2, 1, c.c2);
  long long gam31 = ps.entry_div(g, 2, 0, c.c3);
  long long gam21p = ps.entry_div(gp, 1, 0, d.c1), gam32p = ps.entry_div(gp, 2, 1, d.c2);
  long long gam31p = ps.entry_div(gp, 2, 0, d.c3);

  long long rhs1 = g33 - g23 % m * pw(beta) % m - gam21p % m * pw(d.c1 + alpha - beta) % m +
                   gam32 % m * pw(c.c2 - beta) % m - gam31p % m * pw(d.c3 - beta) % m;
  long long rhs2 = g33 - g23 % m * pw(beta) % m - gam21 % m * pw(c.c1 + beta - alpha) % m -
                   gam32p % m * pw(d.c2 - alpha) % m + gam31 % m * pw(c.c3 - alpha) % m;
  long long rhs3 = g33 - g23 % m * pw(beta) % m - h23 % m * pw(alpha) % m;
  return !(ps.congruent(g22, rhs1) && ps.congruent(h22, rhs2) && ps.congruent(h33, rhs3));
}

}  // namespace gl3::oracle
