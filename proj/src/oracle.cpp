#include "nielsen/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace nielsen {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

std::int64_t to_i64(const Integer& x) {
  if (!x.fits_slong_p()) throw Error(ErrorCode::BudgetExceeded, "oracle entry exceeds machine range");
  return x.get_si();
}

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

// Walks all points of [lo, hi] (inclusive, per coordinate) in lexicographic
// order, last coordinate fastest.
template <class F>
void for_each_point(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi, F&& f) {
  const std::size_t q = lo.size();
  for (std::size_t k = 0; k < q; ++k)
    if (lo[k] > hi[k]) return;
  std::vector<std::int64_t> p = lo;
  while (true) {
    f(p);
    std::size_t k = q;
    while (k > 0) {
      --k;
      if (p[k] < hi[k]) {
        ++p[k];
        break;
      }
      p[k] = lo[k];
      if (k == 0) return;
    }
    if (q == 0) return;
  }
}

}  // namespace

OraclePartition::OraclePartition(std::size_t n, std::size_t q, std::int64_t box_bound,
                                 std::vector<std::uint32_t> class_ids, std::size_t class_count)
    : n_(n),
      q_(q),
      box_bound_(box_bound),
      side_(static_cast<std::size_t>(2 * box_bound + 1)),
      class_ids_(std::move(class_ids)),
      class_count_(class_count) {
  if (class_ids_.size() != n_ * ipow(side_, q_))
    throw Error(ErrorCode::DimensionMismatch, "partition size does not match the box");
}

bool OraclePartition::contains(const IntVector& alpha) const {
  if (alpha.size() != q_) return false;
  for (const Integer& a : alpha)
    if (a < -box_bound_ || a > box_bound_) return false;
  return true;
}

std::size_t OraclePartition::index_of(const ClassLabel& label) const {
  if (label.factor < 1 || label.factor > n_ || !contains(label.alpha))
    throw Error(ErrorCode::InvalidArgument, "label outside the oracle box");
  std::size_t id = 0;
  for (const Integer& a : label.alpha) id = id * side_ + static_cast<std::size_t>(a.get_si() + box_bound_);
  return (label.factor - 1) * ipow(side_, q_) + id;
}

ClassLabel OraclePartition::label_of(std::size_t element) const {
  const std::size_t cells = ipow(side_, q_);
  ClassLabel out;
  out.factor = element / cells + 1;
  std::size_t rest = element % cells;
  out.alpha.assign(q_, Integer(0));
  for (std::size_t k = q_; k > 0; --k) {
    out.alpha[k - 1] = static_cast<long>(rest % side_) - box_bound_;
    rest /= side_;
  }
  return out;
}

OraclePartition brute_classes(const PsiData& data, const OracleConfig& cfg) {
  const std::size_t n = data.n();
  const std::size_t q = data.q();
  const std::int64_t B = cfg.box_bound;
  const std::int64_t G = cfg.word_bound;
  if (B < 1 || G < 1) throw Error(ErrorCode::InvalidArgument, "box and word bounds must be at least 1");
  const double cost = std::pow(2.0 * B + 1, q) * n * std::pow(2.0 * G + 1, q);
  if (cost > cfg.budget)
    throw Error(ErrorCode::BudgetExceeded, "oracle cost " + std::to_string(cost) + " exceeds budget");

  const std::size_t side = static_cast<std::size_t>(2 * B + 1);
  const std::size_t cells = ipow(side, q);
  if (static_cast<double>(cells) * n >= 4.0e9)
    throw Error(ErrorCode::BudgetExceeded, "oracle box too large");

  // psi over the word box, indexed like the box itself.
  const std::size_t wside = static_cast<std::size_t>(2 * G + 1);
  std::vector<SemidirectElement> psi;
  psi.reserve(ipow(wside, q));
  const std::vector<std::int64_t> wlo(q, -G), whi(q, G);
  for_each_point(wlo, whi, [&](const std::vector<std::int64_t>& g) {
    IntVector z(q);
    for (std::size_t k = 0; k < q; ++k) z[k] = static_cast<long>(g[k]);
    psi.push_back(psi_of(data, z));
  });

  UnionFind uf(cells * n);
  std::vector<std::size_t> stride(q, 1);
  for (std::size_t k = q; k-- > 1;) stride[k - 1] = stride[k] * side;

  std::size_t gi = 0;
  const std::size_t words = psi.size();
  for_each_point(wlo, whi, [&](const std::vector<std::int64_t>& g) {
    const SemidirectElement& fwd = psi[gi];
    const SemidirectElement& back = psi[words - 1 - gi];  // psi(-gamma)
    ++gi;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t i = fwd.perm()(j);
      const IntVector& phi = back.translation(j);
      std::vector<std::int64_t> s(q);
      bool fits = true;
      for (std::size_t k = 0; k < q && fits; ++k) {
        s[k] = g[k] + to_i64(phi[k]);
        if (s[k] > 2 * B || s[k] < -2 * B) fits = false;
      }
      if (!fits) continue;
      if (i == j && std::all_of(s.begin(), s.end(), [](std::int64_t x) { return x == 0; })) continue;
      // beta ranges over the box with beta + s also in the box.
      std::vector<std::int64_t> lo(q), hi(q);
      for (std::size_t k = 0; k < q; ++k) {
        lo[k] = std::max(-B, -B - s[k]);
        hi[k] = std::min(B, B - s[k]);
      }
      const std::size_t src_base = (j - 1) * cells;
      const std::size_t dst_base = (i - 1) * cells;
      std::int64_t offset = 0;
      for (std::size_t k = 0; k < q; ++k) offset += s[k] * static_cast<std::int64_t>(stride[k]);
      if (hi[q - 1] < lo[q - 1]) continue;
      // Walk rows along the last coordinate, which is contiguous in the ids.
      const std::vector<std::int64_t> row_lo(lo.begin(), lo.end() - 1), row_hi(hi.begin(), hi.end() - 1);
      const std::size_t run = static_cast<std::size_t>(hi[q - 1] - lo[q - 1] + 1);
      for_each_point(row_lo, row_hi, [&](const std::vector<std::int64_t>& prefix) {
        std::size_t id = static_cast<std::size_t>(lo[q - 1] + B);
        for (std::size_t k = 0; k + 1 < q; ++k) id += static_cast<std::size_t>(prefix[k] + B) * stride[k];
        const std::uint32_t src = static_cast<std::uint32_t>(src_base + id);
        const std::uint32_t dst = static_cast<std::uint32_t>(static_cast<std::int64_t>(dst_base + id) + offset);
        for (std::uint32_t x = 0; x < run; ++x) uf.unite(src + x, dst + x);
      });
    }
  });

  std::vector<std::uint32_t> ids(cells * n);
  std::vector<std::uint32_t> dense(cells * n, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::size_t e = 0; e < ids.size(); ++e) {
    const std::uint32_t root = uf.find(static_cast<std::uint32_t>(e));
    if (dense[root] == UINT32_MAX) dense[root] = next++;
    ids[e] = dense[root];
  }
  return OraclePartition(n, q, B, std::move(ids), next);
}

OracleVerdict compare_with_engine(const PsiData& data, const ReidemeisterReport& report,
                                  const OraclePartition& partition) {
  OracleVerdict v;
  v.engine_total = report.total;
  v.oracle_classes = partition.class_count();

  std::map<ClassLabel, std::uint32_t> label_to_oracle;
  std::vector<const ClassLabel*> oracle_to_label(partition.class_count(), nullptr);
  v.sound = true;
  v.complete = true;
  for (std::size_t e = 0; e < partition.size(); ++e) {
    const ClassLabel box_label = partition.label_of(e);
    const ClassLabel label = classify(data, report, box_label.alpha, box_label.factor);
    const std::uint32_t oc = partition.class_id(e);
    auto [it, inserted] = label_to_oracle.emplace(label, oc);
    if (!inserted && it->second != oc) v.complete = false;
    if (!oracle_to_label[oc])
      oracle_to_label[oc] = &it->first;
    else if (!(*oracle_to_label[oc] == label))
      v.sound = false;
  }
  v.engine_classes_in_box = label_to_oracle.size();

  // Every representative lies in the fundamental box [0, d_k), so a box
  // reaching past the largest diagonal entry meets every class.
  std::int64_t threshold = 0;
  for (const ClassBlock& block : report.blocks) {
    const IntegerMatrix& basis = block.image_lattice.basis();
    for (std::size_t k = 0; k < basis.rows(); ++k)
      threshold = std::max(threshold, to_i64(basis(k, block.image_lattice.pivot_col(k))));
    for (const IntVector& rep : block.representatives)
      for (const Integer& x : rep) threshold = std::max(threshold, to_i64(abs(x)));
  }
  v.coverage_threshold = threshold;

  if (report.total.is_finite() && partition.box_bound() >= threshold)
    v.count_matches = Integer(v.oracle_classes) == report.total.value();
  else
    v.count_matches = v.oracle_classes == v.engine_classes_in_box;
  return v;
}

OracleVerdict oracle_check(const LiftSystem& sys, const OracleConfig& cfg) {
  const PsiData data = validate(sys);
  const ReidemeisterReport report = reidemeister_from_psi(data);
  if (!report.total.is_finite())
    throw Error(ErrorCode::InfiniteClasses, "oracle cannot certify an infinite Reidemeister number");
  return compare_with_engine(data, report, brute_classes(data, cfg));
}

std::vector<RatVector> brute_fixed_points(const LiftSystem& sys, std::int64_t box_bound) {
  if (box_bound < 0) throw Error(ErrorCode::InvalidArgument, "box bound must be nonnegative");
  const std::size_t q = sys.q();
  std::set<RatVector> points;
  const std::vector<std::int64_t> lo(q, -box_bound), hi(q, box_bound);
  for (std::size_t i = 1; i <= sys.n(); ++i) {
    const AffineLiftFactor& f = sys.factor(i);
    RationalMatrix lhs = RationalMatrix::identity(q);
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t c = 0; c < q; ++c) lhs(r, c) -= f.linear(r, c);
    if (determinant(lhs) == 0)
      throw Error(ErrorCode::SingularLinearPart, "E - M is singular for factor " + std::to_string(i));
    const RationalMatrix inv = inverse(lhs);
    const RatVector base = inv * f.offset;

    // Scale by a common denominator so the scan runs on machine integers:
    // the point for alpha is (num_base + num_inv alpha mod den) / den.
    Integer den(1);
    for (std::size_t r = 0; r < q; ++r) {
      den = lcm(den, Integer(base[r].get_den()));
      for (std::size_t c = 0; c < q; ++c) den = lcm(den, Integer(inv(r, c).get_den()));
    }
    IntegerMatrix num_inv(q, q);
    IntVector num_base(q);
    Integer largest(0);
    for (std::size_t r = 0; r < q; ++r) {
      num_base[r] = Rational(base[r] * den).get_num();
      Integer row = abs(num_base[r]);
      for (std::size_t c = 0; c < q; ++c) {
        num_inv(r, c) = Rational(inv(r, c) * den).get_num();
        row += abs(num_inv(r, c)) * box_bound;
      }
      largest = std::max(largest, row);
    }

    if (largest.fits_slong_p() && largest < (Integer(1) << 62)) {
      const std::int64_t d = den.get_si();
      std::set<std::vector<std::int64_t>> seen;
      for_each_point(lo, hi, [&](const std::vector<std::int64_t>& alpha) {
        std::vector<std::int64_t> t(q);
        for (std::size_t r = 0; r < q; ++r) {
          std::int64_t v = num_base[r].get_si();
          for (std::size_t c = 0; c < q; ++c) v += num_inv(r, c).get_si() * alpha[c];
          t[r] = ((v % d) + d) % d;
        }
        seen.insert(std::move(t));
      });
      for (const auto& t : seen) {
        RatVector p;
        for (std::int64_t x : t) p.push_back(ratio(Integer(static_cast<long>(x)), den));
        points.insert(std::move(p));
      }
      continue;
    }

    std::vector<RatVector> columns;
    for (std::size_t c = 0; c < q; ++c) columns.push_back(inv.col(c));
    for_each_point(lo, hi, [&](const std::vector<std::int64_t>& alpha) {
      RatVector t = base;
      for (std::size_t c = 0; c < q; ++c)
        if (alpha[c] != 0)
          for (std::size_t r = 0; r < q; ++r) t[r] += columns[c][r] * static_cast<long>(alpha[c]);
      for (Rational& x : t) x = frac(x);
      points.insert(std::move(t));
    });
  }
  return {points.begin(), points.end()};
}

}  // namespace nielsen
