#include "coprime_census/counting.hpp"

#include "coprime_census/enumerate.hpp"
#include "coprime_census/errors.hpp"
#include "coprime_census/factor.hpp"
#include "coprime_census/poly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>
#include <thread>

namespace coprime_census {
namespace {

// ---------------------------------------------------------------- brute ---

constexpr uint64_t kMatrixMaxW = 2048;  // full w x w coprimality bitmatrix below this

struct PairOracle {
  const FieldCtx* f;
  const std::vector<MonicPoly>* polys;
  std::vector<uint64_t> matrix;  // row-major bit rows, empty = use gcds directly
  size_t words_per_row = 0;

  bool coprime_at(uint64_t i, uint64_t j) const {
    if (!matrix.empty()) {
      return (matrix[i * words_per_row + j / 64] >> (j % 64)) & 1;
    }
    return coprime(*f, (*polys)[i], (*polys)[j]);
  }
};

uint64_t count_block(const CoprimalityGraph& g, const PairOracle& oracle,
                     uint64_t w, uint64_t first_lo, uint64_t first_hi) {
  const uint32_t v = g.vertex_count();
  const auto& edges = g.edges();
  std::vector<uint64_t> idx(v, 0);
  uint64_t count = 0;
  for (idx[0] = first_lo; idx[0] < first_hi; ++idx[0]) {
    std::fill(idx.begin() + 1, idx.end(), 0);
    for (;;) {
      bool ok = true;
      for (const auto& [a, b] : edges) {
        if (!oracle.coprime_at(idx[a - 1], idx[b - 1])) {
          ok = false;
          break;
        }
      }
      count += ok ? 1 : 0;
      // odometer over coordinates 2..v (coordinate 1 is the shard)
      uint32_t i = v;
      while (i-- > 1) {
        if (++idx[i] < w) break;
        idx[i] = 0;
      }
      if (i == 0) break;
    }
  }
  return count;
}

// ---------------------------------------------------- inclusion-exclusion ---

struct SquarefreeLabel {
  std::vector<uint64_t> mask;  // factor-set bits over the irreducible table
  int degree = 0;
  int mu = 1;
};

struct IeContext {
  uint32_t words = 0;
  std::vector<int> factor_degree;       // degree by irreducible id
  std::vector<SquarefreeLabel> labels;  // all squarefree monics of degree <= n
};

IeContext build_labels(const FieldCtx& f, int64_t n, bool fault_flip_mu) {
  IeContext ctx;
  // id table over the irreducibles of degree 1..n, in (degree, enum) order
  std::map<std::vector<uint32_t>, uint32_t> id_of;
  for (int64_t d = 1; d <= n; ++d) {
    for (const MonicPoly& p : f.irreducibles(static_cast<uint32_t>(d))) {
      const uint32_t id = static_cast<uint32_t>(ctx.factor_degree.size());
      id_of.emplace(p.coeffs(), id);
      ctx.factor_degree.push_back(p.degree());
    }
  }
  ctx.words = static_cast<uint32_t>((ctx.factor_degree.size() + 63) / 64);
  if (ctx.words == 0) ctx.words = 1;

  const MonicPoly x = MonicPoly::power_of_x(1);
  for (const MonicPoly& a : enumerate_monic(f, n, EnumerateMode::kUpTo)) {
    const Factorization fac = factorize(f, a);
    if (!fac.squarefree()) continue;
    SquarefreeLabel l;
    l.mask.assign(ctx.words, 0);
    l.degree = a.degree();
    for (const auto& [p, mult] : fac.factors) {
      const uint32_t id = id_of.at(p.coeffs());
      l.mask[id / 64] |= uint64_t{1} << (id % 64);
    }
    l.mu = fac.omega() % 2 == 0 ? 1 : -1;
    if (fault_flip_mu && a == x) l.mu = -l.mu;
    ctx.labels.push_back(std::move(l));
  }
  return ctx;
}

class IeWalker {
 public:
  IeWalker(const CoprimalityGraph& g, const IeContext& ctx, int64_t n,
           const std::vector<uint64_t>& w_by_degree, bool wide_ok)
      : g_(g),
        ctx_(ctx),
        n_(n),
        w_(w_by_degree),
        wide_ok_(wide_ok),
        vmask_(size_t{g.vertex_count()} * ctx.words, 0),
        vdeg_(g.vertex_count(), 0),
        save_mask_(size_t{g.edge_count()} * 2 * ctx.words) {}

  BigInt run() {
    descend(0);
    BigInt out = u128_to_big(pos_) - u128_to_big(neg_);
    out += big_acc_;
    return out;
  }

 private:
  // degree of the factors in `label` not already present in vertex `r`'s set
  int added_degree(uint32_t r, const SquarefreeLabel& label) const {
    int add = 0;
    const uint64_t* vm = &vmask_[size_t{r} * ctx_.words];
    for (uint32_t w = 0; w < ctx_.words; ++w) {
      uint64_t diff = label.mask[w] & ~vm[w];
      while (diff) {
        const uint32_t bit = static_cast<uint32_t>(std::countr_zero(diff));
        add += ctx_.factor_degree[w * 64 + bit];
        diff &= diff - 1;
      }
    }
    return add;
  }

  void apply(uint32_t r, const SquarefreeLabel& label, int newdeg, uint64_t* save) {
    uint64_t* vm = &vmask_[size_t{r} * ctx_.words];
    for (uint32_t w = 0; w < ctx_.words; ++w) {
      save[w] = vm[w];
      vm[w] |= label.mask[w];
    }
    vdeg_[r] = newdeg;
  }

  void restore(uint32_t r, const uint64_t* save, int olddeg) {
    uint64_t* vm = &vmask_[size_t{r} * ctx_.words];
    std::copy(save, save + ctx_.words, vm);
    vdeg_[r] = olddeg;
  }

  void leaf() {
    if (wide_ok_) {
      unsigned __int128 prod = 1;
      for (uint32_t r = 0; r < g_.vertex_count(); ++r) {
        prod *= w_[static_cast<size_t>(n_ - vdeg_[r])];
      }
      (sign_ > 0 ? pos_ : neg_) += prod;
    } else {
      BigInt prod = sign_;
      for (uint32_t r = 0; r < g_.vertex_count(); ++r) {
        prod *= w_[static_cast<size_t>(n_ - vdeg_[r])];
      }
      big_acc_ += prod;
    }
  }

  void descend(uint32_t j) {
    if (j == g_.edge_count()) {
      leaf();
      return;
    }
    const auto [a1, b1] = g_.edges()[j];
    const uint32_t a = a1 - 1, b = b1 - 1;
    uint64_t* save_a = &save_mask_[size_t{j} * 2 * ctx_.words];
    uint64_t* save_b = save_a + ctx_.words;
    for (const SquarefreeLabel& label : ctx_.labels) {
      const int da = vdeg_[a] + added_degree(a, label);
      if (da > n_) continue;
      const int db = vdeg_[b] + added_degree(b, label);
      if (db > n_) continue;
      const int old_a = vdeg_[a], old_b = vdeg_[b];
      apply(a, label, da, save_a);
      apply(b, label, db, save_b);
      sign_ *= label.mu;
      descend(j + 1);
      sign_ *= label.mu;
      restore(b, save_b, old_b);
      restore(a, save_a, old_a);
    }
  }

  static BigInt u128_to_big(unsigned __int128 x) {
    BigInt hi = static_cast<uint64_t>(x >> 64);
    return (hi << 64) + static_cast<uint64_t>(x);
  }

  const CoprimalityGraph& g_;
  const IeContext& ctx_;
  const int64_t n_;
  const std::vector<uint64_t>& w_;
  const bool wide_ok_;
  std::vector<uint64_t> vmask_;
  std::vector<int> vdeg_;
  std::vector<uint64_t> save_mask_;
  int sign_ = 1;
  unsigned __int128 pos_ = 0, neg_ = 0;
  BigInt big_acc_ = 0;
};

}  // namespace

BigInt brute_force_count(const FieldCtx& f, const CoprimalityGraph& g, int64_t n,
                         const BruteForceOptions& opt) {
  if (n < 0) return 0;
  const uint64_t w = w_count_u64(f.q(), n);
  const uint32_t v = g.vertex_count();
  const uint64_t per_tuple = std::max<uint64_t>(1, g.edge_count());

  uint64_t cost = per_tuple;
  for (uint32_t i = 0; i < v; ++i) {
    if (w != 0 && cost > opt.budget / w) {
      throw BudgetError("brute force: w^v * e = " + std::to_string(w) + "^" +
                        std::to_string(v) + " * " + std::to_string(per_tuple) +
                        " gcd tests exceed the budget of " + std::to_string(opt.budget));
    }
    cost *= w;
  }
  if (cost > opt.budget) {
    throw BudgetError("brute force: cost exceeds the budget of " +
                      std::to_string(opt.budget));
  }
  if (w == 0) return 0;

  std::vector<MonicPoly> polys;
  polys.reserve(w);
  for (const MonicPoly& a : enumerate_monic(f, n, EnumerateMode::kUpTo)) {
    polys.push_back(a);
  }

  PairOracle oracle{&f, &polys, {}, 0};
  if (g.edge_count() > 0 && w <= kMatrixMaxW) {
    oracle.words_per_row = (w + 63) / 64;
    oracle.matrix.assign(w * oracle.words_per_row, 0);
    for (uint64_t i = 0; i < w; ++i) {
      for (uint64_t j = i; j < w; ++j) {
        if (coprime(f, polys[i], polys[j])) {
          oracle.matrix[i * oracle.words_per_row + j / 64] |= uint64_t{1} << (j % 64);
          oracle.matrix[j * oracle.words_per_row + i / 64] |= uint64_t{1} << (i % 64);
        }
      }
    }
  }

  const unsigned workers =
      static_cast<unsigned>(std::min<uint64_t>(std::max(1u, opt.workers), w));
  if (workers == 1) {
    return BigInt(count_block(g, oracle, w, 0, w));
  }
  std::vector<uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  const uint64_t chunk = w / workers, extra = w % workers;
  uint64_t at = 0;
  for (unsigned t = 0; t < workers; ++t) {
    const uint64_t len = chunk + (t < extra ? 1 : 0);
    threads.emplace_back([&, t, at, len] {
      partial[t] = count_block(g, oracle, w, at, at + len);
    });
    at += len;
  }
  for (auto& th : threads) th.join();
  BigInt total = 0;
  for (uint64_t c : partial) total += c;
  return total;
}

BigInt inclusion_exclusion_count(const FieldCtx& f, const CoprimalityGraph& g,
                                 int64_t n, const InclusionExclusionOptions& opt) {
  if (n < 0) return 0;
  const uint32_t v = g.vertex_count();
  const uint32_t e = g.edge_count();
  if (e == 0) {
    return ipow(w_count(f.q(), n), v);
  }

  IeContext ctx = build_labels(f, n, opt.fault_flip_mu);
  const double raw = static_cast<double>(e) * std::log2(static_cast<double>(ctx.labels.size()));
  if (raw > std::log2(static_cast<double>(opt.budget)) + 1e-9) {
    throw BudgetError("inclusion-exclusion: " + std::to_string(ctx.labels.size()) +
                      "^" + std::to_string(e) + " raw labelings exceed the budget of " +
                      std::to_string(opt.budget));
  }

  std::vector<uint64_t> w_by_degree(static_cast<size_t>(n) + 1);
  for (int64_t d = 0; d <= n; ++d) {
    w_by_degree[static_cast<size_t>(d)] = w_count_u64(f.q(), d);
  }
  // term products fit __int128 accumulators iff v*bits(w(q^n)) plus the
  // leaf-count headroom stays under 126 bits; otherwise fall back to BigInt
  const int bits_w = 64 - std::countl_zero(std::max<uint64_t>(1, w_by_degree.back()));
  const int budget_bits = 64 - std::countl_zero(std::max<uint64_t>(1, opt.budget));
  const bool wide_ok = static_cast<int>(v) * bits_w + budget_bits <= 126;

  IeWalker walker(g, ctx, n, w_by_degree, wide_ok);
  return walker.run();
}

}  // namespace coprime_census
