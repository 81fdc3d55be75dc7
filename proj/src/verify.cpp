#include "ringinv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ringinv/corner.hpp"
#include "ringinv/geninv.hpp"
#include "ringinv/sweep.hpp"

namespace ringinv {

namespace {

using u64 = std::uint64_t;

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

u64 splitmix64(u64& state) {
  state += 0x9e3779b97f4a7c15ULL;
  u64 z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// ---- sorted index-set helpers ----------------------------------------------

bool subset_of(const std::vector<u64>& x, const std::vector<u64>& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

// intersection contains nothing but (possibly) the zero element, index 0
bool only_zero_common(const std::vector<u64>& x, const std::vector<u64>& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      if (*i != 0) return false;
      ++i, ++j;
    }
  }
  return true;
}

bool no_common(const std::vector<u64>& x, const std::vector<u64>& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else return false;
  }
  return true;
}

bool contains_idx(const std::vector<u64>& x, u64 v) {
  return std::binary_search(x.begin(), x.end(), v);
}

void sort_unique(std::vector<u64>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// ---- per-ring workspace -----------------------------------------------------
// Everything the catalog entries read is precomputed here, so instance sweeps
// are read-only and safe to parallelize. exists/value tables come from the
// definitional brute-force search (the oracle).

struct Workspace {
  RingPtr ring;
  const Ring* r = nullptr;
  u64 n = 0;
  std::vector<Element> elems;
  Element zero, one;
  u64 one_i = 0;

  std::vector<std::optional<Element>> unit_inv;
  std::vector<char> idem;
  std::vector<u64> idem_list, unit_list;
  std::vector<std::vector<u64>> inner_lists;  // indices z with a z a = a
  std::vector<std::optional<GroupInverseResult>> group;
  std::vector<std::optional<DrazinResult>> drazin;
  std::vector<std::optional<Element>> mp;
  std::vector<char> ep;
  std::vector<u64> invol;

  std::vector<std::vector<u64>> rightI, leftI, rightAnn, leftAnn;  // sorted index sets
  std::vector<u64> rpid, lpid;  // canonical ids of right/left principal ideals

  std::vector<char> exists_tab;  // [a*n + d]
  std::vector<u64> value_tab;    // valid where exists_tab

  bool mp_trivial = false;  // MP-invertibles are only 0 and the units

  const Element& el(u64 i) const { return elems[i]; }
  u64 idx(const Element& e) const { return r->index_of(e); }
  bool regular(u64 i) const { return !inner_lists[i].empty(); }
  bool exists(u64 a, u64 d) const { return exists_tab[a * n + d] != 0; }
  u64 val(u64 a, u64 d) const { return value_tab[a * n + d]; }
};

Workspace build_workspace(const RingPtr& ring) {
  if (!ring->enumerable()) throw RingError("theorem verification needs an enumerable ring");
  if (ring->size() > kVerifyMaxElements)
    throw RingError("theorem verification is limited to rings with at most " +
                    std::to_string(kVerifyMaxElements) + " elements");

  Workspace w;
  w.ring = ring;
  w.r = ring.get();
  w.n = ring->size();
  w.elems = enumerate(*ring);
  w.zero = ring->zero();
  w.one = ring->one();
  w.one_i = w.idx(w.one);
  require(w.idx(w.zero) == 0, "the zero element enumerates first");

  w.unit_inv.resize(w.n);
  w.idem.assign(w.n, 0);
  for (u64 i = 0; i < w.n; ++i) {
    w.unit_inv[i] = unit_inverse(w.el(i));
    if (w.unit_inv[i]) w.unit_list.push_back(i);
    if (is_idempotent(w.el(i))) {
      w.idem[i] = 1;
      w.idem_list.push_back(i);
    }
  }

  w.inner_lists.resize(w.n);
  for (u64 a = 0; a < w.n; ++a)
    for (u64 z = 0; z < w.n; ++z)
      if (w.el(a) * w.el(z) * w.el(a) == w.el(a)) w.inner_lists[a].push_back(z);

  w.group.resize(w.n);
  w.drazin.resize(w.n);
  w.mp.resize(w.n);
  w.ep.assign(w.n, 0);
  w.invol.resize(w.n);
  for (u64 i = 0; i < w.n; ++i) {
    w.group[i] = group_inverse(w.el(i));
    w.drazin[i] = drazin_inverse(w.el(i));
    require(w.drazin[i].has_value(), "every element of a finite ring is Drazin invertible");
    if (auto m = mp_inverse(w.el(i))) {
      w.mp[i] = m->inverse;
      w.ep[i] = is_ep(w.el(i)) ? 1 : 0;
    }
    w.invol[i] = w.idx(involute(w.el(i)));
  }

  w.rightI.resize(w.n);
  w.leftI.resize(w.n);
  w.rightAnn.resize(w.n);
  w.leftAnn.resize(w.n);
  for (u64 a = 0; a < w.n; ++a) {
    for (u64 x = 0; x < w.n; ++x) {
      Element ax = w.el(a) * w.el(x);
      Element xa = w.el(x) * w.el(a);
      w.rightI[a].push_back(w.idx(ax));
      w.leftI[a].push_back(w.idx(xa));
      if (ax == w.zero) w.rightAnn[a].push_back(x);
      if (xa == w.zero) w.leftAnn[a].push_back(x);
    }
    sort_unique(w.rightI[a]);
    sort_unique(w.leftI[a]);
  }

  std::map<std::vector<u64>, u64> rids, lids;
  w.rpid.resize(w.n);
  w.lpid.resize(w.n);
  for (u64 a = 0; a < w.n; ++a) {
    w.rpid[a] = rids.emplace(w.rightI[a], rids.size()).first->second;
    w.lpid[a] = lids.emplace(w.leftI[a], lids.size()).first->second;
  }

  // Definitional search: the unique outer inverse of a whose one-sided
  // principal ideals match d's. Candidates are pre-bucketed by ideal pair.
  std::map<std::pair<u64, u64>, std::vector<u64>> buckets;
  for (u64 b = 0; b < w.n; ++b) buckets[{w.rpid[b], w.lpid[b]}].push_back(b);
  w.exists_tab.assign(w.n * w.n, 0);
  w.value_tab.assign(w.n * w.n, 0);
  for (u64 d = 0; d < w.n; ++d) {
    const auto& cand = buckets[{w.rpid[d], w.lpid[d]}];
    for (u64 a = 0; a < w.n; ++a) {
      u64 count = 0, hit = 0;
      for (u64 b : cand) {
        if (w.el(b) * w.el(a) * w.el(b) == w.el(b)) {
          ++count;
          hit = b;
        }
      }
      require(count <= 1, "uniqueness of the inverse along d");
      if (count == 1) {
        w.exists_tab[a * w.n + d] = 1;
        w.value_tab[a * w.n + d] = hit;
      }
    }
  }

  w.mp_trivial = true;
  for (u64 i = 0; i < w.n; ++i)
    if (w.mp[i] && !(i == 0 || w.unit_inv[i])) w.mp_trivial = false;
  return w;
}

// Stratified domain for free variables beyond the second: the whole ring when
// it has at most 12 elements, else 0, 1, idempotents, units and a fixed-seed
// sample, truncated to cap.
std::vector<u64> aux_domain(const Workspace& w, const VerifyOptions& o, std::size_t cap) {
  std::vector<u64> out;
  if (w.n <= 12) {
    out.resize(w.n);
    std::iota(out.begin(), out.end(), u64{0});
    return out;
  }
  std::vector<char> seen(w.n, 0);
  auto push = [&](u64 i) {
    if (out.size() < cap && !seen[i]) {
      seen[i] = 1;
      out.push_back(i);
    }
  };
  push(0);
  push(w.one_i);
  for (u64 i : w.idem_list) push(i);
  for (u64 i : w.unit_list) push(i);
  u64 state = o.seed ^ 0x51f9a8d7c3b2e601ULL;
  for (int tries = 0; tries < 512 && out.size() < cap; ++tries) push(splitmix64(state) % w.n);
  std::sort(out.begin(), out.end());
  return out;
}

std::string budget_note(const Workspace& w, const VerifyOptions& o, const char* vars,
                        std::size_t size) {
  std::ostringstream os;
  os << vars << " budgeted to a stratified domain of " << size
     << " elements (0, 1, idempotents, units, seeded sample; seed=" << o.seed << ")";
  (void)w;
  return os.str();
}

std::vector<u64> sumset(const Workspace& w, const std::vector<u64>& xs,
                        const std::vector<u64>& ys) {
  std::vector<char> seen(w.n, 0);
  for (u64 x : xs)
    for (u64 y : ys) seen[w.idx(w.el(x) + w.el(y))] = 1;
  std::vector<u64> out;
  for (u64 i = 0; i < w.n; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

bool direct_sum_idx(const Workspace& w, const std::vector<u64>& xs, const std::vector<u64>& ys) {
  return only_zero_common(xs, ys) && sumset(w, xs, ys).size() == w.n;
}

// { idx(f(x)) : x in R }, sorted unique
template <class Fn>
std::vector<u64> image_set(const Workspace& w, Fn&& f) {
  std::vector<u64> out;
  out.reserve(w.n);
  for (u64 x = 0; x < w.n; ++x) out.push_back(w.idx(f(w.el(x))));
  sort_unique(out);
  return out;
}

// column of the definitional table: indices of R^{along d}
std::vector<u64> along_set(const Workspace& w, u64 d) {
  std::vector<u64> out;
  for (u64 a = 0; a < w.n; ++a)
    if (w.exists(a, d)) out.push_back(a);
  return out;
}

// corner units of the idempotent e, with their corner inverses
std::vector<std::pair<u64, u64>> corner_units_of(const Workspace& w, const Element& e) {
  CornerRing c = make_corner(e);
  std::vector<std::pair<u64, u64>> out;
  for (u64 x = 0; x < w.n; ++x) {
    if (e * w.el(x) * e != w.el(x)) continue;
    if (auto inv = corner_invert(c, w.el(x))) out.push_back({x, w.idx(*inv)});
  }
  return out;
}

bool rows_equal(const Workspace& w, u64 d1, u64 d2, u64* where) {
  for (u64 a = 0; a < w.n; ++a) {
    bool e1 = w.exists(a, d1), e2 = w.exists(a, d2);
    if (e1 != e2 || (e1 && w.val(a, d1) != w.val(a, d2))) {
      if (where) *where = a;
      return false;
    }
  }
  return true;
}

// ---- instance sweep harness -------------------------------------------------

struct Inst {
  u64 a = 0, b = 0, c = 0;
  int tag = 0;
};

using Checker = std::function<std::optional<FailureWitness>(const Inst&)>;

FailureWitness make_fail(const Workspace& w,
                         std::initializer_list<std::pair<const char*, u64>> binds,
                         std::string detail) {
  FailureWitness f;
  for (const auto& [name, i] : binds) f.bindings.emplace_back(name, w.el(i).str());
  f.detail = std::move(detail);
  return f;
}

void append_note(TheoremReport& rep, const std::string& note) {
  if (note.empty()) return;
  if (!rep.note.empty()) rep.note += "; ";
  rep.note += note;
}

void sweep_entry(const VerifyOptions& o, const std::vector<Inst>& insts, TheoremReport& rep,
                 const Checker& check) {
  auto res = sweep::run(insts.size(), o.parallel, o.max_failures,
                        [&](u64 i) { return !check(insts[i]).has_value(); });
  rep.instances_checked += res.checked;
  for (u64 i : res.failures) {
    auto fw = check(insts[i]);
    require(fw.has_value(), "failure indices re-check deterministically");
    if (rep.failures.size() < o.max_failures) rep.failures.push_back(*fw);
  }
  if (res.failed > res.failures.size())
    append_note(rep, std::to_string(res.failed) + " failures total, " +
                         std::to_string(res.failures.size()) + " witnesses kept");
}

}  // namespace

const char* status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Fail: return "fail";
    case VerifyStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

// ============================ catalog entries ================================

namespace {

// Outer inverses: ab/ba idempotent, ideal and annihilator transfer, and the
// inner case splitting R both ways.
void run_rema1(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 b = 0; b < w.n; ++b)
    for (u64 a : w.inner_lists[b]) insts.push_back({b, a, 0, 0});  // b a b = b
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    const Element &B = w.el(in.a), &A = w.el(in.b);
    Element AB = A * B, BA = B * A;
    u64 abi = w.idx(AB), bai = w.idx(BA);
    if (!is_idempotent(AB) || !is_idempotent(BA))
      return make_fail(w, {{"a", in.b}, {"b", in.a}}, "(i): ab or ba is not idempotent");
    if (w.rpid[in.a] != w.rpid[bai] || w.lpid[in.a] != w.lpid[abi])
      return make_fail(w, {{"a", in.b}, {"b", in.a}}, "(ii): bR = baR or Rab = Rb fails");
    if (w.rightAnn[in.a] != w.rightAnn[abi] || w.leftAnn[in.a] != w.leftAnn[bai])
      return make_fail(w, {{"a", in.b}, {"b", in.a}},
                       "(iii): kernels of b and ab (or of b and ba) differ");
    bool inner = (A * B * A == A);
    bool split_r = direct_sum_idx(w, w.rightI[in.a], w.rightAnn[in.b]);
    bool split_l = direct_sum_idx(w, w.leftI[in.a], w.leftAnn[in.b]);
    if (inner != split_r || inner != split_l)
      return make_fail(w, {{"a", in.b}, {"b", in.a}},
                       "(iv): a = aba is not equivalent to R = bR (+) a^{-1}(0) and "
                       "R = Rb (+) a_{-1}(0)");
    return std::nullopt;
  });
}

// Inverses along 0 and along units; a regular non-zero-divisor is a unit;
// along-sets depend on d only through its two principal ideals.
void run_rema7(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a) insts.push_back({a, 0, 0, 0});
  for (u64 d = 0; d < w.n; ++d)
    if (d != 0 && w.regular(d)) insts.push_back({d, 0, 0, 1});
  for (u64 d : w.unit_list)
    for (u64 a = 0; a < w.n; ++a) insts.push_back({d, a, 0, 2});
  {
    std::map<std::pair<u64, u64>, std::vector<u64>> classes;
    for (u64 d = 0; d < w.n; ++d)
      if (w.regular(d)) classes[{w.rpid[d], w.lpid[d]}].push_back(d);
    for (const auto& [k, ds] : classes)
      for (std::size_t i = 0; i + 1 < ds.size(); ++i)
        insts.push_back({ds[i], ds[i + 1], 0, 3});
  }
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    switch (in.tag) {
      case 0: {  // a^{along 0} = 0 for every a
        if (!w.exists(in.a, 0) || w.val(in.a, 0) != 0)
          return make_fail(w, {{"a", in.a}}, "a^{along 0} = 0 fails");
        return std::nullopt;
      }
      case 1: {  // regular, nonzero, no zero divisor mate => unit
        bool no_zero_div = w.rightAnn[in.a].size() == 1 && w.leftAnn[in.a].size() == 1;
        if (no_zero_div && !w.unit_inv[in.a])
          return make_fail(w, {{"d", in.a}}, "regular non-zero-divisor is not a unit");
        return std::nullopt;
      }
      case 2: {  // unit d: a^{along d} exists iff a is a unit, and equals a^{-1}
        bool ex = w.exists(in.b, in.a);
        bool is_unit = w.unit_inv[in.b].has_value();
        if (ex != is_unit)
          return make_fail(w, {{"d", in.a}, {"a", in.b}},
                           "along a unit d, existence differs from invertibility of a");
        if (ex && w.el(w.val(in.b, in.a)) != *w.unit_inv[in.b])
          return make_fail(w, {{"d", in.a}, {"a", in.b}}, "a^{along d} != a^{-1} for unit d");
        return std::nullopt;
      }
      default: {  // equal principal ideals => equal along-sets and values
        u64 bad = 0;
        if (!rows_equal(w, in.a, in.b, &bad))
          return make_fail(w, {{"d", in.a}, {"dtilde", in.b}, {"a", bad}},
                           "dR = dtR and Rd = Rdt but along-sets/values differ at a");
        return std::nullopt;
      }
    }
  });
}

// Group-invertible toolkit: ideal collapses, the spectral idempotent and its
// uniqueness, commuting inner inverses, and powers.
void run_rema13(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a) insts.push_back({a, 0, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    const Element& A = w.el(in.a);
    // (iii) holds for arbitrary a: a commuting inner inverse forces a in R#
    for (u64 z : w.inner_lists[in.a]) {
      const Element& Z = w.el(z);
      if (A * Z != Z * A) continue;
      if (!w.group[in.a] || w.group[in.a]->inverse != Z * A * Z)
        return make_fail(w, {{"a", in.a}, {"b", z}},
                         "(iii): commuting inner inverse b but a# != bab");
    }
    if (!w.group[in.a]) return std::nullopt;
    const Element& G = w.group[in.a]->inverse;
    const Element& P = w.group[in.a]->spectral_idempotent;
    u64 gi = w.idx(G);
    Element E = A * G;
    u64 ei = w.idx(E);
    if (!(w.rpid[in.a] == w.rpid[ei] && w.rpid[in.a] == w.rpid[gi] &&
          w.lpid[in.a] == w.lpid[ei] && w.lpid[in.a] == w.lpid[gi]))
      return make_fail(w, {{"a", in.a}}, "(i): aR/Ra do not collapse onto a#R/Ra#");
    auto s_e = image_set(w, [&](const Element& x) { return E * x * E; });
    auto s_a = image_set(w, [&](const Element& x) { return A * x * A; });
    auto s_g = image_set(w, [&](const Element& x) { return G * x * G; });
    if (s_e != s_a || s_a != s_g)
      return make_fail(w, {{"a", in.a}}, "(i): corner sets aa#Raa#, aRa, a#Ra# differ");
    // (ii): p_a works and is the unique such idempotent
    if (!w.unit_inv[w.idx(A + P)] || A * P != w.zero || P * A != w.zero)
      return make_fail(w, {{"a", in.a}}, "(ii): p_a fails a + p unit, ap = pa = 0");
    for (u64 q : w.idem_list) {
      const Element& Q = w.el(q);
      bool works = w.unit_inv[w.idx(A + Q)].has_value() && A * Q == w.zero && Q * A == w.zero;
      if (works != (Q == P))
        return make_fail(w, {{"a", in.a}, {"p", q}}, "(ii): spectral idempotent not unique");
    }
    Element u = w.one - P;
    if (u * A * u != A)
      return make_fail(w, {{"a", in.a}}, "(ii): a != (1-p_a) a (1-p_a)");
    auto cv = corner_invert(make_corner(u), A);
    if (!cv || *cv != G)
      return make_fail(w, {{"a", in.a}}, "(ii): corner inverse of a in (1-p_a)R(1-p_a) is not a#");
    for (unsigned k = 2; k <= 4; ++k) {  // (iv) on sampled exponents
      Element Ak = w.r->pow(A, k);
      u64 aki = w.idx(Ak);
      if (!w.group[aki] || w.group[aki]->inverse != w.r->pow(G, k) ||
          w.group[aki]->spectral_idempotent != P)
        return make_fail(w, {{"a", in.a}},
                         "(iv): (a^n)# != (a#)^n or p_{a^n} != p_a for n = " + std::to_string(k));
    }
    return std::nullopt;
  });
  append_note(rep, "(iv) checked for exponents 2..4");
}

// Annihilator inclusions force the products dab/bad to recover d and give
// ideal inclusions; regular d gives the converse inclusions.
void run_pro3(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<u64> dom = aux_domain(w, o, 64);
  if (w.n > 12) append_note(rep, budget_note(w, o, "d", dom.size()));
  std::vector<Inst> insts;
  for (u64 b = 0; b < w.n; ++b)
    for (u64 a : w.inner_lists[b])
      for (u64 d : dom) insts.push_back({b, a, d, 0});
  for (u64 b = 0; b < w.n; ++b)
    for (u64 d = 0; d < w.n; ++d)
      if (w.regular(d)) insts.push_back({b, d, 0, 1});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    if (in.tag == 0) {
      const Element &B = w.el(in.a), &A = w.el(in.b), &D = w.el(in.c);
      if (subset_of(w.rightAnn[in.a], w.rightAnn[in.c])) {  // b^{-1}(0) in d^{-1}(0)
        if (D * A * B != D || !subset_of(w.leftI[in.c], w.leftI[in.a]))
          return make_fail(w, {{"a", in.b}, {"b", in.a}, {"d", in.c}},
                           "(i): d != dab or Rd not in Rb");
      }
      if (subset_of(w.leftAnn[in.a], w.leftAnn[in.c])) {  // b_{-1}(0) in d_{-1}(0)
        if (B * A * D != D || !subset_of(w.rightI[in.c], w.rightI[in.a]))
          return make_fail(w, {{"a", in.b}, {"b", in.a}, {"d", in.c}},
                           "(ii): d != bad or dR not in bR");
      }
      return std::nullopt;
    }
    u64 b = in.a, d = in.b;  // d regular
    if (subset_of(w.rightAnn[d], w.rightAnn[b]) && !subset_of(w.leftI[b], w.leftI[d]))
      return make_fail(w, {{"b", b}, {"d", d}}, "(iii): d^{-1}(0) in b^{-1}(0) but Rb not in Rd");
    if (subset_of(w.leftAnn[d], w.leftAnn[b]) && !subset_of(w.rightI[b], w.rightI[d]))
      return make_fail(w, {{"b", b}, {"d", d}}, "(iv): d_{-1}(0) in b_{-1}(0) but bR not in dR");
    return std::nullopt;
  });
}

// The four statement bundles of the outer-inverse characterization agree.
// The bundles only involve b and d, so the quantification runs over pairs
// (b, d) with b an outer inverse of some a (equivalently, b regular).
void run_thm4(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 b = 0; b < w.n; ++b)
    if (w.regular(b))
      for (u64 d = 0; d < w.n; ++d) insts.push_back({b, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 b = in.a, d = in.b;
    bool i = w.rpid[b] == w.rpid[d] && w.lpid[b] == w.lpid[d];
    bool ii = w.lpid[b] == w.lpid[d] && subset_of(w.rightI[b], w.rightI[d]) &&
              subset_of(w.leftAnn[b], w.leftAnn[d]);
    bool iii = w.rpid[b] == w.rpid[d] && subset_of(w.leftI[b], w.leftI[d]) &&
               subset_of(w.rightAnn[b], w.rightAnn[d]);
    bool iv = subset_of(w.leftI[b], w.leftI[d]) && subset_of(w.rightI[b], w.rightI[d]) &&
              subset_of(w.leftAnn[b], w.leftAnn[d]) && subset_of(w.rightAnn[b], w.rightAnn[d]);
    if (i != ii || i != iii || i != iv)
      return make_fail(w, {{"b", b}, {"d", d}}, "statements (i)-(iv) disagree");
    return std::nullopt;
  });
}

// The thirteen statement bundles agree once d is regular.
void run_thm5(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 b = 0; b < w.n; ++b)
    if (w.regular(b))
      for (u64 d = 0; d < w.n; ++d)
        if (w.regular(d)) insts.push_back({b, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 b = in.a, d = in.b;
    const auto &bR = w.rightI[b], &dR = w.rightI[d], &Rb = w.leftI[b], &Rd = w.leftI[d];
    const auto &bkr = w.rightAnn[b], &dkr = w.rightAnn[d];
    const auto &bkl = w.leftAnn[b], &dkl = w.leftAnn[d];
    bool stmts[13] = {
        w.rpid[b] == w.rpid[d] && w.lpid[b] == w.lpid[d],
        w.lpid[b] == w.lpid[d] && subset_of(dR, bR) && subset_of(dkl, bkl),
        w.rpid[b] == w.rpid[d] && subset_of(Rd, Rb) && subset_of(dkr, bkr),
        w.lpid[b] == w.lpid[d] && bkl == dkl,
        subset_of(Rb, Rd) && subset_of(dR, bR) && subset_of(bkr, dkr) && subset_of(dkl, bkl),
        subset_of(Rd, Rb) && subset_of(bR, dR) && subset_of(bkl, dkl) && subset_of(dkr, bkr),
        subset_of(Rd, Rb) && subset_of(dR, bR) && subset_of(dkr, bkr) && subset_of(dkl, bkl),
        w.rpid[b] == w.rpid[d] && bkr == dkr,
        subset_of(Rb, Rd) && subset_of(bkr, dkr) && bkl == dkl,
        subset_of(Rd, Rb) && subset_of(dkr, bkr) && bkl == dkl,
        subset_of(dR, bR) && subset_of(dkl, bkl) && bkr == dkr,
        subset_of(bR, dR) && subset_of(bkl, dkl) && bkr == dkr,
        bkr == dkr && bkl == dkl,
    };
    for (int k = 1; k < 13; ++k)
      if (stmts[k] != stmts[0])
        return make_fail(w, {{"b", b}, {"d", d}},
                         "statement " + std::to_string(k + 1) + " disagrees with statement 1");
    return std::nullopt;
  });
}

// Corner criterion with both corners and both witness products.
void run_thm8(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.regular(d)) insts.push_back({a, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    bool truth = w.exists(a, d);
    const Element &A = w.el(a), &D = w.el(d);
    for (u64 db : w.inner_lists[d]) {
      const Element& Db = w.el(db);
      Element e = D * Db, eb = Db * D;
      Element lhs = D * A * e, rhs = eb * A * D;
      auto x = corner_invert(make_corner(e), lhs);
      auto y = corner_invert(make_corner(eb), rhs);
      if (x.has_value() != truth)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "(ii): corner invertibility of d a d dbar mismatches existence");
      if (y.has_value() != truth)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "(iii): corner invertibility of dbar d a d mismatches existence");
      auto g1 = w.group[w.idx(lhs)];
      bool iv = g1.has_value() && g1->spectral_idempotent == w.one - e;
      if (iv != truth)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "(iv): group invertibility with p = 1 - d dbar mismatches existence");
      auto g2 = w.group[w.idx(rhs)];
      bool v = g2.has_value() && g2->spectral_idempotent == w.one - eb;
      if (v != truth)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "(v): group invertibility with p = 1 - dbar d mismatches existence");
      if (truth) {
        const Element& B = w.el(w.val(a, d));
        if (*x * D != B || D * *y != B)
          return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                           "witness products x d / d y do not equal a^{along d}");
      }
    }
    return std::nullopt;
  });
}

// The corner witnesses are plain group inverses and recover from a^{along d}.
void run_rema4000(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.exists(a, d)) insts.push_back({a, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    const Element &A = w.el(a), &D = w.el(d), &B = w.el(w.val(a, d));
    for (u64 db : w.inner_lists[d]) {
      const Element& Db = w.el(db);
      Element e = D * Db, eb = Db * D;
      Element lhs = D * A * e, rhs = eb * A * D;
      auto x = corner_invert(make_corner(e), lhs);
      auto y = corner_invert(make_corner(eb), rhs);
      if (!x || !y)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "corner inverses must exist when a^{along d} does");
      auto g1 = w.group[w.idx(lhs)];
      auto g2 = w.group[w.idx(rhs)];
      if (!g1 || g1->inverse != *x || *x != B * Db)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "(d a d dbar)# != corner inverse or != a^{along d} dbar");
      if (!g2 || g2->inverse != *y || *y != Db * B)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "(dbar d a d)# != corner inverse or != dbar a^{along d}");
    }
    return std::nullopt;
  });
}

// Invertibility along d transfers to a d dbar and dbar d a with equal values.
void run_cor9(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.regular(d)) insts.push_back({a, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    bool truth = w.exists(a, d);
    const Element &A = w.el(a), &D = w.el(d);
    for (u64 db : w.inner_lists[d]) {
      const Element& Db = w.el(db);
      u64 a2 = w.idx(A * D * Db), a3 = w.idx(Db * D * A);
      if (w.exists(a2, d) != truth || w.exists(a3, d) != truth)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "existence differs between a, a d dbar, dbar d a");
      if (truth && (w.val(a2, d) != w.val(a, d) || w.val(a3, d) != w.val(a, d)))
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "values differ between a, a d dbar, dbar d a");
    }
    return std::nullopt;
  });
}

// Perturbing a by x(1 - d dbar) and (1 - dbar d)y preserves the inverse.
void run_cor10(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<u64> dom = aux_domain(w, o, 24);
  if (w.n > 12) append_note(rep, budget_note(w, o, "x,y", dom.size()));
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.exists(a, d)) insts.push_back({a, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    const Element &A = w.el(a), &D = w.el(d);
    const Element& Db = w.el(w.inner_lists[d].front());
    Element right = w.one - D * Db, left = w.one - Db * D;
    u64 b = w.val(a, d);
    for (u64 x : dom) {
      Element Ax = A + w.el(x) * right;
      u64 axi = w.idx(Ax);
      if (!w.exists(axi, d) || w.val(axi, d) != b)
        return make_fail(w, {{"a", a}, {"d", d}, {"x", x}},
                         "(i): a + x(1 - d dbar) loses the inverse along d");
      for (u64 y : dom) {
        Element Ay = A + left * w.el(y);
        u64 ayi = w.idx(Ay);
        if (!w.exists(ayi, d) || w.val(ayi, d) != b)
          return make_fail(w, {{"a", a}, {"d", d}, {"y", y}},
                           "(ii): a + (1 - dbar d)y loses the inverse along d");
        Element Axy = Ax + left * w.el(y);
        u64 axyi = w.idx(Axy);
        if (!w.exists(axyi, d) || w.val(axyi, d) != b)
          return make_fail(w, {{"a", a}, {"d", d}, {"x", x}, {"y", y}},
                           "(iii): the doubly perturbed element loses the inverse along d");
      }
    }
    return std::nullopt;
  });
}

// Idempotent case: five equivalent statements and the value (p a p)#.
void run_cor1000(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 p : w.idem_list) insts.push_back({a, p, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, p = in.b;
    bool truth = w.exists(a, p);
    const Element &A = w.el(a), &P = w.el(p);
    Element PAP = P * A * P;
    u64 papi = w.idx(PAP);
    if (w.exists(w.idx(A * P), p) != truth || w.exists(w.idx(P * A), p) != truth)
      return make_fail(w, {{"a", a}, {"p", p}}, "(ii)/(iii): ap or pa existence differs");
    auto cv = corner_invert(make_corner(P), PAP);
    if (cv.has_value() != truth)
      return make_fail(w, {{"a", a}, {"p", p}}, "(iv): corner invertibility of pap differs");
    auto g = w.group[papi];
    bool v = g.has_value() && g->spectral_idempotent == w.one - P;
    if (v != truth)
      return make_fail(w, {{"a", a}, {"p", p}}, "(v): pap group with p_{pap} = 1 - p differs");
    if (truth) {
      u64 b = w.val(a, p);
      if (w.val(w.idx(A * P), p) != b || w.val(w.idx(P * A), p) != b || w.el(b) != g->inverse)
        return make_fail(w, {{"a", a}, {"p", p}},
                         "values a^{along p}, (ap)^{along p}, (pa)^{along p}, (pap)# differ");
    }
    return std::nullopt;
  });
}

constexpr std::size_t kCornerUnitValueCap = 16;
constexpr std::size_t kPerturbSamples = 8;

std::vector<std::pair<u64, u64>> perturb_pairs(const Workspace& w, const VerifyOptions& o) {
  std::vector<std::pair<u64, u64>> out;
  if (w.n <= 12) {
    for (u64 x = 0; x < w.n; ++x)
      for (u64 y = 0; y < w.n; ++y) out.push_back({x, y});
  } else {
    u64 state = o.seed ^ 0x2b7e151628aed2a6ULL;
    out.push_back({0, 0});
    for (std::size_t k = 1; k < kPerturbSamples; ++k)
      out.push_back({splitmix64(state) % w.n, splitmix64(state) % w.n});
  }
  return out;
}

// The three sum-set descriptions of the set of elements invertible along d,
// with the value formulas w d / d u / l on each summand.
void run_thm11(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  auto pert = perturb_pairs(w, o);
  if (w.n > 12)
    append_note(rep, "value identities perturbed over " + std::to_string(pert.size()) +
                         " seeded (x,y) pairs; corner units capped at " +
                         std::to_string(kCornerUnitValueCap) + " per instance");
  std::vector<Inst> insts;
  for (u64 d = 0; d < w.n; ++d)
    for (u64 db : w.inner_lists[d]) insts.push_back({d, db, 0, 0});
  for (u64 p : w.idem_list)
    if (p != 0 && p != w.one_i) insts.push_back({p, 0, 0, 1});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    if (in.tag == 0) {
      u64 d = in.a, db = in.b;
      const Element &D = w.el(d), &Db = w.el(db);
      Element e = D * Db, eb = Db * D;
      Element ce = w.one - e, ceb = w.one - eb;
      auto col = along_set(w, d);
      auto cu_e = corner_units_of(w, e);
      auto cu_eb = corner_units_of(w, eb);
      std::vector<u64> head1, head2;
      for (const auto& [v, wi] : cu_e) head1.push_back(w.idx(Db * w.el(v)));
      for (const auto& [z, ui] : cu_eb) head2.push_back(w.idx(w.el(z) * Db));
      sort_unique(head1);
      sort_unique(head2);
      auto mid1 = image_set(w, [&](const Element& x) { return ceb * x * e; });
      auto tail1 = image_set(w, [&](const Element& x) { return x * ce; });
      auto mid2 = image_set(w, [&](const Element& x) { return eb * x * ce; });
      auto tail2 = image_set(w, [&](const Element& x) { return ceb * x; });
      if (sumset(w, sumset(w, head1, mid1), tail1) != col)
        return make_fail(w, {{"d", d}, {"dbar", db}},
                         "(i): dbar(d dbar R d dbar)^{-1} + (1 - dbar d)R d dbar + R(1 - d dbar) "
                         "is not the along-set of d");
      if (sumset(w, sumset(w, head2, mid2), tail2) != col)
        return make_fail(w, {{"d", d}, {"dbar", db}},
                         "(ii): (dbar d R dbar d)^{-1}dbar + dbar d R(1 - d dbar) + (1 - dbar d)R "
                         "is not the along-set of d");
      std::size_t lim1 = std::min(cu_e.size(), kCornerUnitValueCap);
      for (std::size_t k = 0; k < lim1; ++k) {
        auto [v, wi] = cu_e[k];
        u64 base = w.idx(Db * w.el(v));
        u64 want = w.idx(w.el(wi) * D);
        if (!w.exists(base, d) || w.val(base, d) != want)
          return make_fail(w, {{"d", d}, {"dbar", db}, {"v", v}},
                           "(i): (dbar v)^{along d} != w d for the corner inverse w of v");
        for (const auto& [x, y] : pert) {
          Element A = Db * w.el(v) + ceb * w.el(x) * e + w.el(y) * ce;
          u64 ai = w.idx(A);
          if (!w.exists(ai, d) || w.val(ai, d) != want)
            return make_fail(w, {{"d", d}, {"dbar", db}, {"v", v}, {"x", x}},
                             "(i): perturbed element loses the value w d");
        }
      }
      std::size_t lim2 = std::min(cu_eb.size(), kCornerUnitValueCap);
      for (std::size_t k = 0; k < lim2; ++k) {
        auto [z, ui] = cu_eb[k];
        u64 base = w.idx(w.el(z) * Db);
        u64 want = w.idx(D * w.el(ui));
        if (!w.exists(base, d) || w.val(base, d) != want)
          return make_fail(w, {{"d", d}, {"dbar", db}, {"z", z}},
                           "(ii): (z dbar)^{along d} != d u for the corner inverse u of z");
        for (const auto& [x, y] : pert) {
          Element A = w.el(z) * Db + eb * w.el(x) * ce + ceb * w.el(y);
          u64 ai = w.idx(A);
          if (!w.exists(ai, d) || w.val(ai, d) != want)
            return make_fail(w, {{"d", d}, {"dbar", db}, {"z", z}, {"x", x}},
                             "(ii): perturbed element loses the value d u");
        }
      }
      return std::nullopt;
    }
    // idempotent p, p not in {0, 1}: four-part sum-set and value l = corner inverse
    u64 p = in.a;
    const Element& P = w.el(p);
    Element cp = w.one - P;
    auto col = along_set(w, p);
    auto cu_p = corner_units_of(w, P);
    std::vector<u64> head;
    for (const auto& [r, li] : cu_p) head.push_back(r);
    sort_unique(head);
    auto part2 = image_set(w, [&](const Element& x) { return P * x * cp; });
    auto part3 = image_set(w, [&](const Element& x) { return cp * x * P; });
    auto part4 = image_set(w, [&](const Element& x) { return cp * x * cp; });
    if (sumset(w, sumset(w, sumset(w, head, part2), part3), part4) != col)
      return make_fail(w, {{"p", p}},
                       "(iii): (pRp)^{-1} + pR(1-p) + (1-p)Rp + (1-p)R(1-p) is not the "
                       "along-set of p");
    std::size_t lim = std::min(cu_p.size(), kCornerUnitValueCap);
    for (std::size_t k = 0; k < lim; ++k) {
      auto [r, li] = cu_p[k];
      if (!w.exists(r, p) || w.val(r, p) != li)
        return make_fail(w, {{"p", p}, {"r", r}}, "(iii): r^{along p} != corner inverse l");
      for (const auto& [x, y] : pert) {
        Element M = P * w.el(x) * cp + cp * w.el(y) * P + cp * w.el(x) * w.el(y) * cp;
        u64 ai = w.idx(w.el(r) + M);
        if (!w.exists(ai, p) || w.val(ai, p) != li)
          return make_fail(w, {{"p", p}, {"r", r}, {"x", x}, {"y", y}},
                           "(iii): (r + m)^{along p} != l for m in the complementary parts");
      }
    }
    return std::nullopt;
  });
}

// Disjointness and containment facts for the sum-set description.
void run_rema12(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  append_note(rep,
              "disjointness claims in (ii) checked for d != 0 only; at d = 0 both sides "
              "contain 0, so the claims are read for nonzero d");
  std::vector<Inst> insts;
  for (u64 d = 0; d < w.n; ++d)
    for (u64 db : w.inner_lists[d]) insts.push_back({d, db, 0, 0});
  for (u64 p : w.idem_list)
    if (p != 0 && p != w.one_i) insts.push_back({p, 0, 0, 1});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    if (in.tag == 0) {
      u64 d = in.a, db = in.b;
      const Element &D = w.el(d), &Db = w.el(db);
      Element e = D * Db, eb = Db * D;
      Element ce = w.one - e, ceb = w.one - eb;
      auto k1 = image_set(w, [&](const Element& x) { return ceb * x * e; });
      auto k2 = image_set(w, [&](const Element& x) { return x * ce; });
      auto k3 = image_set(w, [&](const Element& x) { return eb * x * ce; });
      auto k4 = image_set(w, [&](const Element& x) { return ceb * x; });
      auto k5 = image_set(w, [&](const Element& x) { return ceb * x * ce; });
      auto s12 = sumset(w, k1, k2);
      if (s12 != sumset(w, k3, k4) || s12 != sumset(w, sumset(w, k1, k3), k5))
        return make_fail(w, {{"d", d}, {"dbar", db}},
                         "(i): the three forms of the non-unit part differ");
      auto cu_e = corner_units_of(w, e);
      std::vector<u64> head;
      for (const auto& [v, wi] : cu_e) head.push_back(w.idx(Db * w.el(v)));
      sort_unique(head);
      auto t = image_set(w, [&](const Element& x) { return eb * x * e; });
      if (!subset_of(head, t))
        return make_fail(w, {{"d", d}, {"dbar", db}},
                         "(ii): dbar(d dbar R d dbar)^{-1} is not inside dbar d R d dbar");
      if (d != 0) {
        if (!no_common(head, s12))
          return make_fail(w, {{"d", d}, {"dbar", db}},
                           "(ii): head and ideal part of the sum intersect for d != 0");
        if (!only_zero_common(k1, k2) || !only_zero_common(k3, k5))
          return make_fail(w, {{"d", d}, {"dbar", db}},
                           "(ii)/(iii): summands share a nonzero element for d != 0");
      }
      std::size_t lim = std::min(cu_e.size(), kCornerUnitValueCap);
      for (std::size_t k = 0; k < lim; ++k) {
        auto [v, wi] = cu_e[k];
        u64 base = w.idx(Db * w.el(v));
        if (!w.exists(base, d) || w.el(wi) != w.el(w.val(base, d)) * Db)
          return make_fail(w, {{"d", d}, {"dbar", db}, {"v", v}},
                           "(iv): w != (dbar v)^{along d} dbar");
      }
      auto cu_eb = corner_units_of(w, eb);
      lim = std::min(cu_eb.size(), kCornerUnitValueCap);
      for (std::size_t k = 0; k < lim; ++k) {
        auto [z, ui] = cu_eb[k];
        u64 base = w.idx(w.el(z) * Db);
        if (!w.exists(base, d) || w.el(ui) != Db * w.el(w.val(base, d)))
          return make_fail(w, {{"d", d}, {"dbar", db}, {"z", z}},
                           "(iv): u != dbar (z dbar)^{along d}");
      }
      return std::nullopt;
    }
    u64 p = in.a;
    const Element& P = w.el(p);
    Element cp = w.one - P;
    auto cu_p = corner_units_of(w, P);
    std::vector<u64> head;
    for (const auto& [r, li] : cu_p) head.push_back(r);
    sort_unique(head);
    auto part2 = image_set(w, [&](const Element& x) { return P * x * cp; });
    auto part3 = image_set(w, [&](const Element& x) { return cp * x * P; });
    auto part4 = image_set(w, [&](const Element& x) { return cp * x * cp; });
    if (!no_common(head, sumset(w, sumset(w, part2, part3), part4)))
      return make_fail(w, {{"p", p}}, "(iii): (pRp)^{-1} meets the complementary sum");
    if (!only_zero_common(part2, part3) || !only_zero_common(part2, part4) ||
        !only_zero_common(part3, part4))
      return make_fail(w, {{"p", p}}, "(iii): complementary parts share a nonzero element");
    std::size_t lim = std::min(cu_p.size(), kCornerUnitValueCap);
    for (std::size_t k = 0; k < lim; ++k) {
      auto [r, li] = cu_p[k];
      if (!w.group[r] || w.el(li) != w.group[r]->inverse)
        return make_fail(w, {{"p", p}, {"r", r}}, "(iv): l != r# for r in (pRp)^{-1}");
    }
    return std::nullopt;
  });
}

// Unique decomposition a = dbar s + t (and the dual a = u dbar + v)
// characterizing invertibility along d, with the forced component in R#.
void run_thm19(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.regular(d)) insts.push_back({a, d, 0, 0});
  for (u64 a = 0; a < w.n; ++a)
    for (u64 p : w.idem_list) insts.push_back({a, p, 0, 1});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    bool truth = w.exists(a, d);
    const Element &A = w.el(a), &D = w.el(d);
    if (in.tag == 1) {
      const Element& P = D;
      Element S = P * A * P, T = A - S;
      u64 si = w.idx(S);
      bool cond = w.group[si].has_value() &&
                  w.group[si]->spectral_idempotent == w.one - P && P * T * P == w.zero;
      if (cond != truth)
        return make_fail(w, {{"a", a}, {"p", d}},
                         "idempotent form: decomposition criterion mismatches existence");
      if (truth && w.el(w.val(a, d)) != w.group[si]->inverse)
        return make_fail(w, {{"a", a}, {"p", d}}, "idempotent form: a^{along p} != s#");
      u64 matches = 0;
      for (u64 s2 = 0; s2 < w.n; ++s2) {
        const Element& S2 = w.el(s2);
        Element T2 = A - S2;
        if (w.group[s2] && w.group[s2]->spectral_idempotent == w.one - P &&
            P * T2 * P == w.zero)
          ++matches;
      }
      if (matches != (truth ? 1u : 0u))
        return make_fail(w, {{"a", a}, {"p", d}},
                         "idempotent form: decomposition is not unique exactly when it exists");
      return std::nullopt;
    }
    for (u64 db : w.inner_lists[d]) {
      const Element& Db = w.el(db);
      Element e = D * Db, eb = Db * D;
      Element S = D * A * e;  // forced left component dadd̄
      Element T = A - Db * S;
      u64 si = w.idx(S);
      bool left = w.group[si].has_value() && w.group[si]->spectral_idempotent == w.one - e &&
                  eb * T * e == w.zero;
      if (left != truth)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "left form: criterion for a = dbar s + t mismatches existence");
      if (truth && w.el(w.val(a, d)) != w.group[si]->inverse * D)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "left form: a^{along d} != s# d");
      Element U = eb * A * D;  // forced right component d̄dad
      Element V = A - U * Db;
      u64 ui = w.idx(U);
      bool right = w.group[ui].has_value() && w.group[ui]->spectral_idempotent == w.one - eb &&
                   eb * V * e == w.zero;
      if (right != truth)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "right form: criterion for a = u dbar + v mismatches existence");
      if (truth && w.el(w.val(a, d)) != D * w.group[ui]->inverse)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "right form: a^{along d} != d u#");
    }
    // uniqueness of the left decomposition, canonical dbar
    const Element& Db = w.el(w.inner_lists[d].front());
    Element e = D * Db, eb = Db * D;
    u64 matches = 0;
    for (u64 s2 = 0; s2 < w.n; ++s2) {
      Element T2 = A - Db * w.el(s2);
      if (w.group[s2] && w.group[s2]->spectral_idempotent == w.one - e &&
          eb * T2 * e == w.zero)
        ++matches;
    }
    if (matches != (truth ? 1u : 0u))
      return make_fail(w, {{"a", a}, {"d", d}},
                       "left form: component s is not unique exactly when it exists");
    return std::nullopt;
  });
  append_note(rep, "uniqueness scanned over all s in R for the canonical dbar");
}

// Along-sets and values of Drazin/group/EP paths all collapse to the set of
// elements invertible along 1 - spectral idempotent companions.
void run_thm14(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  append_note(rep, "power quantifier sampled at n in {1,2,3}");
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a) {
    if (w.group[a]) insts.push_back({a, 0, 0, 0});
    insts.push_back({a, 0, 0, 1});
    insts.push_back({a, 0, 0, 2});
    if (w.mp[a] && w.ep[a]) insts.push_back({a, 0, 0, 3});
  }
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a;
    const Element& A = w.el(a);
    u64 bad = 0;
    switch (in.tag) {
      case 0: {  // group invertible: rows of a^n, (a#)^n, aa# all agree
        const Element& G = w.group[a]->inverse;
        u64 base = w.idx(A * G);
        for (unsigned k = 1; k <= 3; ++k) {
          if (!rows_equal(w, w.idx(w.r->pow(A, k)), base, &bad))
            return make_fail(w, {{"a", a}, {"v", bad}},
                             "(i): along-set of a^" + std::to_string(k) + " differs from aa#");
          if (!rows_equal(w, w.idx(w.r->pow(G, k)), base, &bad))
            return make_fail(w, {{"a", a}, {"v", bad}},
                             "(i): along-set of (a#)^" + std::to_string(k) +
                                 " differs from aa#");
        }
        return std::nullopt;
      }
      case 1: {  // Drazin path
        const auto& dz = *w.drazin[a];
        const Element& AD = dz.inverse;
        unsigned k = dz.classical_index;
        u64 base = w.idx(w.one - dz.spectral_idempotent);
        for (unsigned m = 1; m <= 3; ++m)
          if (!rows_equal(w, w.idx(w.r->pow(AD, m)), base, &bad))
            return make_fail(w, {{"a", a}, {"v", bad}},
                             "(ii): along-set of (a^d)^" + std::to_string(m) +
                                 " differs from 1 - a^pi");
        for (unsigned m = k; m <= k + 1; ++m)
          if (!rows_equal(w, w.idx(w.r->pow(A, m)), base, &bad))
            return make_fail(w, {{"a", a}, {"v", bad}},
                             "(ii): along-set of a^" + std::to_string(m) +
                                 " differs from 1 - a^pi (index " + std::to_string(k) + ")");
        for (unsigned j = 1; j + 1 <= k && j <= 2; ++j)
          if (!rows_equal(w, w.idx(w.r->pow(A, j) * AD * A), base, &bad))
            return make_fail(w, {{"a", a}, {"v", bad}},
                             "(ii): along-set of a^" + std::to_string(j) +
                                 " a^d a differs from 1 - a^pi");
        return std::nullopt;
      }
      case 2: {  // generalized Drazin path (coincides with Drazin here)
        const auto& dz = *w.drazin[a];
        const Element& AD = dz.inverse;
        u64 base = w.idx(w.one - dz.spectral_idempotent);
        for (unsigned m = 1; m <= 3; ++m) {
          if (!rows_equal(w, w.idx(w.r->pow(AD, m)), base, &bad))
            return make_fail(w, {{"a", a}, {"v", bad}},
                             "(iii): along-set of (a^D)^" + std::to_string(m) +
                                 " differs from 1 - a^pi");
          if (!rows_equal(w, w.idx(w.r->pow(A, m) * AD * A), base, &bad))
            return make_fail(w, {{"a", a}, {"v", bad}},
                             "(iii): along-set of a^" + std::to_string(m) +
                                 " a^D a differs from 1 - a^pi");
        }
        return std::nullopt;
      }
      default: {  // EP path
        const Element& M = *w.mp[a];
        Element As = involute(A), Ms = involute(M);
        u64 base = w.idx(A * M);
        for (unsigned k = 1; k <= 3; ++k) {
          if (!rows_equal(w, w.idx(w.r->pow(A, k)), base, &bad) ||
              !rows_equal(w, w.idx(w.r->pow(M, k)), base, &bad) ||
              !rows_equal(w, w.idx(w.r->pow(As, k)), base, &bad) ||
              !rows_equal(w, w.idx(w.r->pow(Ms, k)), base, &bad))
            return make_fail(w, {{"a", a}, {"v", bad}},
                             "(iv): EP power along-sets differ from aa+ at n = " +
                                 std::to_string(k));
        }
        return std::nullopt;
      }
    }
  });
}

// Group-invertible d: decomposition a = s + t with p_s = p_d and
// (1 - p_d) t (1 - p_d) = 0; the value is s#.
void run_cor21(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.group[d]) insts.push_back({a, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    bool truth = w.exists(a, d);
    const Element& A = w.el(a);
    const Element& Pd = w.group[d]->spectral_idempotent;
    Element U = w.one - Pd;
    Element S = U * A * U, T = A - S;
    u64 si = w.idx(S);
    bool cond = w.group[si].has_value() && w.group[si]->spectral_idempotent == Pd &&
                U * T * U == w.zero;
    if (cond != truth)
      return make_fail(w, {{"a", a}, {"d", d}},
                       "decomposition criterion with p_s = p_d mismatches existence");
    if (truth && w.el(w.val(a, d)) != w.group[si]->inverse)
      return make_fail(w, {{"a", a}, {"d", d}}, "a^{along d} != s#");
    u64 matches = 0;
    for (u64 s2 = 0; s2 < w.n; ++s2) {
      Element T2 = A - w.el(s2);
      if (w.group[s2] && w.group[s2]->spectral_idempotent == Pd && U * T2 * U == w.zero)
        ++matches;
    }
    if (matches != (truth ? 1u : 0u))
      return make_fail(w, {{"a", a}, {"d", d}},
                       "decomposition is not unique exactly when it exists");
    return std::nullopt;
  });
}

// The reverse order law (xy)^{along d} = y^{along d} x^{along d}, read
// conditionally (for pairs whose product is again invertible along d), holds
// for all pairs exactly when d is group invertible. The unconditional law
// with closure fails already for idempotents of M_2(Z_2), so the closure
// clause is not part of the checked dichotomy.
void run_thm15(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  append_note(rep, "conditional reading: pairs whose product leaves the along-set do not "
                   "refute the law");
  std::vector<Inst> insts;
  for (u64 d = 0; d < w.n; ++d)
    if (w.regular(d)) insts.push_back({d, 0, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 d = in.a;
    auto col = along_set(w, d);
    bool law = true;
    for (u64 x : col) {
      for (u64 y : col) {
        u64 xy = w.idx(w.el(x) * w.el(y));
        if (w.exists(xy, d) &&
            w.el(w.val(xy, d)) != w.el(w.val(y, d)) * w.el(w.val(x, d))) {
          law = false;
          break;
        }
      }
      if (!law) break;
    }
    if (law != w.group[d].has_value())
      return make_fail(w, {{"d", d}},
                       "conditional reverse order law holds iff d in R# fails for this d");
    return std::nullopt;
  });
}

// Unit translation: R^{along ud} = R^{along d} u^{-1} with value u a^{along d},
// and R^{along du} = u^{-1} R^{along d} with value a^{along d} u.
void run_thm16(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 d = 0; d < w.n; ++d)
    if (w.regular(d))
      for (u64 u : w.unit_list) insts.push_back({d, u, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 d = in.a, u = in.b;
    const Element &D = w.el(d), &U = w.el(u);
    u64 ud = w.idx(U * D), du = w.idx(D * U);
    for (u64 y = 0; y < w.n; ++y) {
      const Element& Y = w.el(y);
      u64 yu = w.idx(Y * U), uy = w.idx(U * Y);
      if (w.exists(y, ud) != w.exists(yu, d))
        return make_fail(w, {{"d", d}, {"u", u}, {"a", y}},
                         "R^{along ud} != R^{along d} u^{-1} at a");
      if (w.exists(y, ud) && w.el(w.val(y, ud)) != U * w.el(w.val(yu, d)))
        return make_fail(w, {{"d", d}, {"u", u}, {"a", y}},
                         "(a u^{-1})^{along u d} != u a^{along d} at a");
      if (w.exists(y, du) != w.exists(uy, d))
        return make_fail(w, {{"d", d}, {"u", u}, {"a", y}},
                         "R^{along du} != u^{-1} R^{along d} at a");
      if (w.exists(y, du) && w.el(w.val(y, du)) != w.el(w.val(uy, d)) * U)
        return make_fail(w, {{"d", d}, {"u", u}, {"a", y}},
                         "(u^{-1} a)^{along d u} != a^{along d} u at a");
    }
    return std::nullopt;
  });
}

// a^{along d} commutes with a iff d is group invertible and a commutes with
// p_d, iff a splits as a corner unit plus an element of p_d R p_d.
void run_thm17(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.exists(a, d)) insts.push_back({a, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    const Element &A = w.el(a), &B = w.el(w.val(a, d));
    bool commutes = (A * B == B * A);
    bool spectral = false, split = false;
    if (w.group[d]) {
      const Element& Pd = w.group[d]->spectral_idempotent;
      spectral = (A * Pd == Pd * A);
      Element U = w.one - Pd;
      Element X = U * A * U, M = Pd * A * Pd;
      split = (A == X + M) && corner_invert(make_corner(U), X).has_value();
    }
    if (commutes != spectral)
      return make_fail(w, {{"a", a}, {"d", d}},
                       "(i): commuting mismatches d in R# with a p_d = p_d a");
    if (commutes != split)
      return make_fail(w, {{"a", a}, {"d", d}},
                       "(ii): commuting mismatches the corner-unit split of a");
    return std::nullopt;
  });
}

// d is group invertible iff some a invertible along d commutes with a^{along d}.
void run_cor19(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 d = 0; d < w.n; ++d)
    if (w.regular(d)) insts.push_back({d, 0, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 d = in.a;
    bool found = false;
    for (u64 a : along_set(w, d)) {
      const Element &A = w.el(a), &B = w.el(w.val(a, d));
      if (A * B == B * A) {
        found = true;
        break;
      }
    }
    if (found != w.group[d].has_value())
      return make_fail(w, {{"d", d}},
                       "existence of a commuting pair mismatches group invertibility of d");
    return std::nullopt;
  });
}

// Commuting criterion by ideal membership: ab = ba iff da in Rd and ad in dR.
void run_thm5000(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.exists(a, d)) insts.push_back({a, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    const Element &A = w.el(a), &D = w.el(d), &B = w.el(w.val(a, d));
    bool commutes = (A * B == B * A);
    bool memb = contains_idx(w.leftI[d], w.idx(D * A)) &&
                contains_idx(w.rightI[d], w.idx(A * D));
    if (commutes != memb)
      return make_fail(w, {{"a", a}, {"d", d}},
                       "ab = ba mismatches (da in Rd and ad in dR)");
    return std::nullopt;
  });
}

// EP criterion by ideal membership: a EP iff aa* in a*R and a*a in Ra*.
void run_rema6000(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  if (w.mp_trivial) {
    rep.status = VerifyStatus::NotApplicable;
    append_note(rep, "every Moore-Penrose invertible element here is 0 or a unit, for which "
                     "the criterion is vacuous");
    return;
  }
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    if (w.mp[a]) insts.push_back({a, 0, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a;
    const Element& A = w.el(a);
    Element As = involute(A);
    u64 asi = w.idx(As);
    bool memb = contains_idx(w.rightI[asi], w.idx(A * As)) &&
                contains_idx(w.leftI[asi], w.idx(As * A));
    if ((w.ep[a] != 0) != memb)
      return make_fail(w, {{"a", a}}, "EP mismatches (aa* in a*R and a*a in Ra*)");
    return std::nullopt;
  });
}

// a^{along d} is an inner inverse of a iff R = dR (+) a^{-1}(0) iff
// R = Rd (+) a_{-1}(0).
void run_thm7_inner(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.exists(a, d)) insts.push_back({a, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    const Element &A = w.el(a), &B = w.el(w.val(a, d));
    bool inner = (A * B * A == A);
    bool split_r = direct_sum_idx(w, w.rightI[d], w.rightAnn[a]);
    bool split_l = direct_sum_idx(w, w.leftI[d], w.leftAnn[a]);
    if (inner != split_r || inner != split_l)
      return make_fail(w, {{"a", a}, {"d", d}},
                       "inner-ness mismatches R = dR (+) a^{-1}(0) / R = Rd (+) a_{-1}(0)");
    return std::nullopt;
  });
}

// When a^{along d} is inner it inverts dbar d a d dbar both ways, and is the
// group/MP inverse of the corresponding corner products.
void run_thm701(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  bool mp_note = false;
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.exists(a, d)) {
        const Element &A = w.el(a), &B = w.el(w.val(a, d));
        if (A * B * A == A) insts.push_back({a, d, 0, 0});
      }
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    const Element &A = w.el(a), &D = w.el(d), &B = w.el(w.val(a, d));
    for (u64 db : w.inner_lists[d]) {
      const Element& Db = w.el(db);
      Element C = Db * D * A * D * Db;
      if (B * C * B != B || C * B * C != C)
        return make_fail(w, {{"a", a}, {"d", d}, {"dbar", db}},
                         "(i): b is not a reflexive inverse of dbar d a d dbar");
    }
    if (w.group[d]) {
      const Element& Dg = w.group[d]->inverse;
      Element C = Dg * D * A * D * Dg;
      auto g = w.group[w.idx(C)];
      if (!g || g->inverse != B)
        return make_fail(w, {{"a", a}, {"d", d}}, "(ii): (d# d a d d#)# != a^{along d}");
    }
    if (!w.mp_trivial && w.mp[d]) {
      const Element& Dm = *w.mp[d];
      Element C = Dm * D * A * D * Dm;
      auto m = mp_inverse(C);
      if (!m || m->inverse != B)
        return make_fail(w, {{"a", a}, {"d", d}}, "(iii): (d+ d a d d+)+ != a^{along d}");
    }
    return std::nullopt;
  });
  if (w.mp_trivial) mp_note = true;
  if (mp_note)
    append_note(rep, "(iii) skipped: Moore-Penrose invertibles here are only 0 and units");
}

// EP cross formulas between the group and Moore-Penrose inverses.
void run_cor705(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  if (w.mp_trivial) {
    rep.status = VerifyStatus::NotApplicable;
    append_note(rep, "every Moore-Penrose invertible element here is 0 or a unit, so the EP "
                     "cross formulas have no nontrivial instances");
    return;
  }
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    if (w.mp[a] && w.ep[a]) insts.push_back({a, 0, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a;
    const Element& A = w.el(a);
    if (!w.group[a])
      return make_fail(w, {{"a", a}}, "EP element is not group invertible");
    const Element &G = w.group[a]->inverse, &M = *w.mp[a];
    Element m1 = involute(A * G) * A * involute(G * A);
    auto g1 = w.group[w.idx(m1)];
    if (!g1 || g1->inverse != M)
      return make_fail(w, {{"a", a}}, "((aa#)* a (a# a)*)# != a+");
    Element m2 = M * A * A * A * M;
    auto m = mp_inverse(m2);
    if (!m || m->inverse != G)
      return make_fail(w, {{"a", a}}, "(a+ a^3 a+)+ != a#");
    return std::nullopt;
  });
}

// a^{along d} = d x d for every inner inverse x of d a d.
void run_thm702(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a)
    for (u64 d = 0; d < w.n; ++d)
      if (w.exists(a, d)) insts.push_back({a, d, 0, 0});
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a, d = in.b;
    const Element &A = w.el(a), &D = w.el(d), &B = w.el(w.val(a, d));
    u64 dadi = w.idx(D * A * D);
    if (w.inner_lists[dadi].empty())
      return make_fail(w, {{"a", a}, {"d", d}}, "d a d is not regular although a^{along d} exists");
    for (u64 x : w.inner_lists[dadi])
      if (D * w.el(x) * D != B)
        return make_fail(w, {{"a", a}, {"d", d}, {"x", x}}, "d x d != a^{along d}");
    return std::nullopt;
  });
}

// Classical inverses from inner inverses: a# through inner inverses of a^3
// (with absorption identities), a+ through inner inverses of a* a a*.
void run_cor_final(const Workspace& w, const VerifyOptions& o, TheoremReport& rep) {
  std::vector<Inst> insts;
  for (u64 a = 0; a < w.n; ++a) {
    if (w.group[a]) {
      insts.push_back({a, 0, 0, 0});
      insts.push_back({a, 0, 0, 1});
    }
    if (w.mp[a]) {
      insts.push_back({a, 0, 0, 2});
      insts.push_back({a, 0, 0, 3});
    }
  }
  sweep_entry(o, insts, rep, [&](const Inst& in) -> std::optional<FailureWitness> {
    u64 a = in.a;
    const Element& A = w.el(a);
    switch (in.tag) {
      case 0: {
        const Element& G = w.group[a]->inverse;
        for (u64 ab : w.inner_lists[a]) {
          const Element& Ab = w.el(ab);
          if (A * Ab * G != G || G * Ab * A != G)
            return make_fail(w, {{"a", a}, {"abar", ab}},
                             "(i): a abar a# != a# or a# abar a != a#");
        }
        return std::nullopt;
      }
      case 1: {
        const Element& G = w.group[a]->inverse;
        u64 cube = w.idx(A * A * A);
        if (w.inner_lists[cube].empty())
          return make_fail(w, {{"a", a}}, "(ii): a^3 is not regular although a is in R#");
        for (u64 x : w.inner_lists[cube])
          if (A * w.el(x) * A != G)
            return make_fail(w, {{"a", a}, {"x", x}}, "(ii): a x a != a# for x inner of a^3");
        return std::nullopt;
      }
      case 2: {
        const Element& M = *w.mp[a];
        Element As = involute(A);
        for (u64 ab : w.inner_lists[a]) {
          const Element& Ab = w.el(ab);
          if (M * involute(A * Ab) != M || involute(Ab * A) * M != M)
            return make_fail(w, {{"a", a}, {"abar", ab}},
                             "(iii): a+(a abar)* != a+ or (abar a)* a+ != a+");
        }
        (void)As;
        return std::nullopt;
      }
      default: {
        const Element& M = *w.mp[a];
        Element As = involute(A);
        u64 sand = w.idx(As * A * As);
        if (w.inner_lists[sand].empty())
          return make_fail(w, {{"a", a}}, "(iv): a* a a* is not regular although a is MP");
        for (u64 x : w.inner_lists[sand])
          if (As * w.el(x) * As != M)
            return make_fail(w, {{"a", a}, {"x", x}},
                             "(iv): a* x a* != a+ for x inner of a* a a*");
        return std::nullopt;
      }
    }
  });
}

struct CatalogEntry {
  const char* id;
  const char* description;
  void (*run)(const Workspace&, const VerifyOptions&, TheoremReport&);
};

const CatalogEntry kCatalog[] = {
    {"REMA1",
     "outer inverses: ab/ba idempotent, ideal and kernel transfer, and the inner splitting",
     run_rema1},
    {"REMA7", "inverses along 0 and along units; regular non-zero-divisors are units",
     run_rema7},
    {"REMA13",
     "group-inverse toolkit: ideal collapses, spectral idempotent, commuting inner inverses, "
     "powers",
     run_rema13},
    {"PRO3", "kernel inclusions force dab = d / bad = d and the matching ideal inclusions",
     run_pro3},
    {"THM4", "four equivalent ideal/kernel descriptions of the outer inverse along d", run_thm4},
    {"THM5", "thirteen equivalent descriptions of the outer inverse along a regular d",
     run_thm5},
    {"THM8", "corner criterion: a invertible along d iff d a d dbar is a corner unit", run_thm8},
    {"REMA4000", "the corner witnesses are the group inverses (d a d dbar)# and (dbar d a d)#",
     run_rema4000},
    {"COR9", "invertibility along d transfers to a d dbar and dbar d a with equal values",
     run_cor9},
    {"COR10", "perturbations x(1 - d dbar) and (1 - dbar d)y preserve the inverse along d",
     run_cor10},
    {"COR1000", "idempotent case: a invertible along p iff pap is a unit of pRp; value (pap)#",
     run_cor1000},
    {"THM11", "three sum-set descriptions of the set of elements invertible along d",
     run_thm11},
    {"REMA12", "disjointness and containment facts for the sum-set description", run_rema12},
    {"THM19", "unique decompositions a = dbar s + t and a = u dbar + v along d", run_thm19},
    {"THM14", "along-sets of power, Drazin and EP companions collapse together", run_thm14},
    {"COR21", "group-invertible d: a = s + t with p_s = p_d; the value is s#", run_cor21},
    {"THM15", "reverse order law along d holds for all pairs iff d is group invertible",
     run_thm15},
    {"THM16", "unit translation of along-sets and values by ud and du", run_thm16},
    {"THM17", "commuting inverse along d iff d in R# and a splits across p_d", run_thm17},
    {"COR19", "d in R# iff some a invertible along d commutes with its inverse", run_cor19},
    {"THM5000", "commuting inverse along d iff da in Rd and ad in dR", run_thm5000},
    {"REMA6000", "EP iff aa* in a*R and a*a in Ra* (for MP invertible a)", run_rema6000},
    {"THM7_INNER", "a^{along d} inner iff R = dR (+) a^{-1}(0) iff R = Rd (+) a_{-1}(0)",
     run_thm7_inner},
    {"THM701", "inner case: b inverts dbar d a d dbar; group/MP corner formulas", run_thm701},
    {"COR705", "EP cross formulas ((aa#)* a (a# a)*)# = a+ and (a+ a^3 a+)+ = a#", run_cor705},
    {"THM702", "a^{along d} = d x d for every inner inverse x of d a d", run_thm702},
    {"COR_FINAL", "classical recovery: a# = a x a from inner x of a^3; a+ = a* x a* from "
                  "inner x of a* a a*",
     run_cor_final},
};

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : kCatalog)
    if (id == e.id) return &e;
  return nullptr;
}

TheoremReport run_entry(const Workspace& w, const CatalogEntry& e, const VerifyOptions& opts) {
  TheoremReport rep;
  rep.theorem_id = e.id;
  rep.ring = w.r->spec();
  rep.status = VerifyStatus::Pass;
  auto t0 = std::chrono::steady_clock::now();
  e.run(w, opts, rep);
  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (rep.status != VerifyStatus::NotApplicable)
    rep.status = rep.failures.empty() ? VerifyStatus::Pass : VerifyStatus::Fail;
  return rep;
}

}  // namespace

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : kCatalog) v.push_back(e.id);
    return v;
  }();
  return ids;
}

bool is_catalog_id(const std::string& id) { return find_entry(id) != nullptr; }

const char* catalog_description(const std::string& id) {
  const CatalogEntry* e = find_entry(id);
  if (!e) throw RingError("unknown theorem id: " + id);
  return e->description;
}

TheoremReport verify_theorem(const RingPtr& ring, const std::string& id,
                             const VerifyOptions& opts) {
  const CatalogEntry* e = find_entry(id);
  if (!e) throw RingError("unknown theorem id: " + id);
  Workspace w = build_workspace(ring);
  return run_entry(w, *e, opts);
}

std::vector<TheoremReport> verify_all(const RingPtr& ring, const VerifyOptions& opts) {
  Workspace w = build_workspace(ring);
  constexpr std::size_t count = sizeof(kCatalog) / sizeof(kCatalog[0]);
  std::vector<TheoremReport> out(count);
#ifdef _OPENMP
  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i) out[i] = run_entry(w, kCatalog[i], opts);
    return out;
  }
#endif
  for (std::size_t i = 0; i < count; ++i) out[i] = run_entry(w, kCatalog[i], opts);
  return out;
}

nlohmann::ordered_json to_json(const TheoremReport& rep) {
  nlohmann::ordered_json j;
  j["theorem_id"] = rep.theorem_id;
  j["ring"] = rep.ring;
  j["status"] = status_name(rep.status);
  j["instances_checked"] = rep.instances_checked;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const auto& f : rep.failures) {
    nlohmann::ordered_json jf;
    nlohmann::ordered_json binds;
    for (const auto& [name, lit] : f.bindings) binds[name] = lit;
    jf["witness"] = binds;
    jf["detail"] = f.detail;
    fails.push_back(jf);
  }
  j["failures"] = fails;
  j["elapsed_ms"] = rep.elapsed_ms;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<TheoremReport>& reps) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reps) arr.push_back(to_json(r));
  return arr;
}

CensusReport census(const RingPtr& ring, const VerifyOptions& opts) {
  (void)opts;
  Workspace w = build_workspace(ring);
  CensusReport c;
  c.ring = w.r->spec();
  c.size = w.n;
  std::map<unsigned, std::uint64_t> hist;
  for (u64 i = 0; i < w.n; ++i) {
    if (w.unit_inv[i]) ++c.units;
    if (w.idem[i]) ++c.idempotents;
    if (w.regular(i)) ++c.regular;
    if (w.group[i]) ++c.group_invertible;
    if (is_quasinilpotent(w.el(i))) ++c.quasinilpotent;
    if (w.mp[i]) {
      ++c.mp_invertible;
      if (w.ep[i]) ++c.ep;
    }
    ++hist[w.drazin[i]->index];
  }
  require(c.units <= c.group_invertible && c.group_invertible <= c.regular,
          "units within group invertibles within regulars");
  for (const auto& [k, v] : hist) c.drazin_index_histogram.emplace_back(k, v);
  for (u64 d = 0; d < w.n; ++d) {
    if (!w.regular(d)) continue;
    std::uint64_t count = 0;
    for (u64 a = 0; a < w.n; ++a)
      if (w.exists(a, d)) ++count;
    c.along_set_sizes.emplace_back(w.el(d).str(), count);
  }
  return c;
}

nlohmann::ordered_json to_json(const CensusReport& c) {
  nlohmann::ordered_json j;
  j["ring"] = c.ring;
  j["size"] = c.size;
  j["units"] = c.units;
  j["idempotents"] = c.idempotents;
  j["regular"] = c.regular;
  j["group_invertible"] = c.group_invertible;
  j["quasinilpotent"] = c.quasinilpotent;
  j["mp_invertible"] = c.mp_invertible;
  j["ep"] = c.ep;
  nlohmann::ordered_json hist = nlohmann::ordered_json::array();
  for (const auto& [k, v] : c.drazin_index_histogram)
    hist.push_back(nlohmann::ordered_json{{"index", k}, {"count", v}});
  j["drazin_index_histogram"] = hist;
  nlohmann::ordered_json along = nlohmann::ordered_json::array();
  for (const auto& [d, v] : c.along_set_sizes)
    along.push_back(nlohmann::ordered_json{{"d", d}, {"size", v}});
  j["along_set_sizes"] = along;
  return j;
}

}  // namespace ringinv
