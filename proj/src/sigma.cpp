#include "supchar/sigma.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>

namespace supchar {

std::string to_string(IndexSubset s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

namespace {

constexpr std::uint64_t kP = SigmaMatrix::kModulus;

std::uint64_t mul_mod61(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(prod & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  return add_mod61(lo, hi);
}

std::uint64_t bigint_mod61(const BigInt& v) {
  BigInt r = v % BigInt(std::to_string(kP));
  if (r < 0) r += BigInt(std::to_string(kP));
  return std::stoull(r.get_str());
}

std::vector<std::uint64_t> fingerprint_weights(int degree) {
  // Fixed seed: fingerprints are reproducible across runs and threads.
  std::mt19937_64 rng(0x5eed5u);
  std::vector<std::uint64_t> w(static_cast<std::size_t>(degree));
  for (auto& x : w) x = rng() % kP;
  return w;
}

}  // namespace

SigmaMatrix::SigmaMatrix(const CharacterTable& t) : SigmaMatrix(t, false) {}

SigmaMatrix::SigmaMatrix(const CharacterTable& t, bool force_bigint)
    : n_(t.num_classes()), degree_(t.field->degree()), field_(t.field) {
  const auto n = static_cast<std::size_t>(n_);
  const auto d = static_cast<std::size_t>(degree_);
  base_.reserve(n * n);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) base_.push_back(t.value(i, 0) * t.value(i, j));
  }

  std::vector<Rational> coords(n * n * d);
  BigInt common_den = 1;
  for (std::size_t e = 0; e < base_.size(); ++e) {
    for (const auto& term : base_[e].terms()) {
      coords[e * d + static_cast<std::size_t>(term.exponent)] = term.coeff;
      mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), term.coeff.get_den_mpz_t());
    }
  }
  std::vector<BigInt> scaled(coords.size());
  BigInt max_abs = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    Rational s = coords[k] * common_den;
    scaled[k] = s.get_num();
    if (abs(scaled[k]) > max_abs) max_abs = abs(scaled[k]);
  }

  const auto weights = fingerprint_weights(degree_);
  fingerprints_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t fp = 0;
      for (std::size_t k = 0; k < d; ++k) {
        const BigInt& c = scaled[(i * n + j) * d + k];
        if (c != 0) fp = add_mod61(fp, mul_mod61(bigint_mod61(c), weights[k]));
      }
      fingerprints_[j * n + i] = fp;
    }
  }

  const BigInt limit = BigInt(1) << 61;
  if (!force_bigint && max_abs * static_cast<long>(n_) < limit) {
    std::vector<std::int64_t> small(scaled.size());
    for (std::size_t k = 0; k < scaled.size(); ++k) small[k] = scaled[k].get_si();
    coords_ = std::move(small);
  } else {
    coords_ = std::move(scaled);
  }
}

template <typename T>
bool SigmaMatrix::columns_equal_impl(const std::vector<T>& c, IndexSubset part, int col_a, int col_b) const {
  const auto n = static_cast<std::size_t>(n_);
  const auto d = static_cast<std::size_t>(degree_);
  for (std::size_t k = 0; k < d; ++k) {
    T diff = 0;
    for (std::uint64_t b = part.bits(); b != 0; b &= b - 1) {
      const auto row = static_cast<std::size_t>(std::countr_zero(b));
      diff += c[(row * n + static_cast<std::size_t>(col_a)) * d + k];
      diff -= c[(row * n + static_cast<std::size_t>(col_b)) * d + k];
    }
    if (diff != 0) return false;
  }
  return true;
}

bool SigmaMatrix::part_columns_equal(IndexSubset part, int col_a, int col_b) const {
  return std::visit([&](const auto& c) { return columns_equal_impl(c, part, col_a, col_b); }, coords_);
}

SigmaMatrix sigma_matrix(const CharacterTable& t) { return SigmaMatrix(t); }

std::vector<Cyclotomic> sigma_of_part(const SigmaMatrix& m, IndexSubset part) {
  if (part.empty()) throw ArgumentError("sigma_of_part: empty part");
  if (part.max_index() > m.n()) throw ArgumentError("sigma_of_part: part " + to_string(part) + " exceeds n = " + std::to_string(m.n()));
  std::vector<Cyclotomic> out;
  out.reserve(static_cast<std::size_t>(m.n()));
  for (int j = 0; j < m.n(); ++j) {
    Cyclotomic sum(m.field(), 0L);
    for (int i : part.indices()) sum += m.entry(i - 1, j);
    out.push_back(std::move(sum));
  }
  return out;
}

bool is_bad_part(const SigmaMatrix& m, IndexSubset part) {
  if (part.empty() || part.contains(1) || part.max_index() > m.n()) {
    throw ArgumentError("is_bad_part: part " + to_string(part) + " must be a nonempty subset of {2.." + std::to_string(m.n()) + "}");
  }
  const auto sigma = sigma_of_part(m, part);
  std::unordered_set<std::string> seen;
  for (int j = 1; j < m.n(); ++j) seen.insert(sigma[static_cast<std::size_t>(j)].canonical_key());
  return seen.size() == static_cast<std::size_t>(m.n() - 1);
}

BadPartSet::BadPartSet(int n) : n_(n), dense_(n - 1 <= kDenseLimit) {
  if (n < 1 || n > kMaxClasses) throw SizeError("BadPartSet: n must be in [1, 64]");
  if (dense_) bitmap_.assign(std::max<std::size_t>(1, (std::size_t{1} << (n - 1)) / 64), 0);
}

void BadPartSet::insert(IndexSubset part) {
  if (part.empty() || part.contains(1) || part.max_index() > n_) {
    throw ArgumentError("bad part " + to_string(part) + " must be a nonempty subset of {2.." + std::to_string(n_) + "}");
  }
  if (dense_) {
    const std::uint64_t k = part.bits() >> 1;
    auto& word = bitmap_[k >> 6];
    const std::uint64_t bit = 1ULL << (k & 63);
    if (!(word & bit)) {
      word |= bit;
      ++count_;
    }
    return;
  }
  if (sparse_.insert(part.bits()).second) ++count_;
}

void BadPartSet::merge(const BadPartSet& other) {
  if (other.n_ != n_) throw ArgumentError("BadPartSet::merge: size mismatch");
  if (dense_) {
    count_ = 0;
    for (std::size_t w = 0; w < bitmap_.size(); ++w) {
      bitmap_[w] |= other.bitmap_[w];
      count_ += static_cast<std::uint64_t>(std::popcount(bitmap_[w]));
    }
    return;
  }
  for (auto b : other.sparse_) {
    if (sparse_.insert(b).second) ++count_;
  }
}

std::vector<IndexSubset> BadPartSet::members() const {
  std::vector<IndexSubset> out;
  out.reserve(count_);
  if (dense_) {
    for (std::size_t w = 0; w < bitmap_.size(); ++w) {
      for (std::uint64_t b = bitmap_[w]; b != 0; b &= b - 1) {
        out.emplace_back(((static_cast<std::uint64_t>(w) << 6) | static_cast<std::uint64_t>(std::countr_zero(b))) << 1);
      }
    }
    return out;
  }
  for (auto b : sparse_) out.emplace_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Scans Gray-code ranks [lo, hi) over the n-1 nontrivial characters.
void scan_bad_parts(const SigmaMatrix& m, std::uint64_t lo, std::uint64_t hi, BadPartSet& out) {
  const int n = m.n();
  const auto cols = static_cast<std::size_t>(n - 1);
  std::vector<std::uint64_t> vals(cols, 0);
  std::vector<std::pair<std::uint64_t, int>> sorted(cols);

  auto gray = [](std::uint64_t i) { return i ^ (i >> 1); };
  auto row_value = [&](int row, std::size_t c) { return m.fingerprint(row, static_cast<int>(c) + 1); };

  std::uint64_t g = gray(lo);
  for (std::uint64_t b = g; b != 0; b &= b - 1) {
    const int row = std::countr_zero(b) + 1;
    for (std::size_t c = 0; c < cols; ++c) vals[c] = add_mod61(vals[c], row_value(row, c));
  }

  for (std::uint64_t i = lo; i < hi; ++i) {
    if (i != lo) {
      const int bit = std::countr_zero(i);
      const int row = bit + 1;
      g ^= 1ULL << bit;
      const bool added = (g >> bit) & 1U;
      for (std::size_t c = 0; c < cols; ++c) {
        const std::uint64_t v = row_value(row, c);
        vals[c] = added ? add_mod61(vals[c], v) : add_mod61(vals[c], v == 0 ? 0 : kP - v);
      }
    }
    const IndexSubset part(g << 1);

    for (std::size_t c = 0; c < cols; ++c) sorted[c] = {vals[c], static_cast<int>(c) + 1};
    std::sort(sorted.begin(), sorted.end());
    bool distinct = true;
    for (std::size_t a = 0; a < cols && distinct; ++a) {
      // Within a run of equal fingerprints compare every pair exactly.
      for (std::size_t b = a + 1; b < cols && sorted[b].first == sorted[a].first; ++b) {
        if (m.part_columns_equal(part, sorted[a].second, sorted[b].second)) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) out.insert(part);
  }
}

}  // namespace

BadPartSet find_bad_parts(const SigmaMatrix& m, unsigned threads) {
  const int n = m.n();
  BadPartSet result(n);
  if (n < 2) return result;
  const std::uint64_t total = 1ULL << (n - 1);
  threads = std::max(1U, threads);
  const std::uint64_t chunks = std::min<std::uint64_t>(threads, total - 1);
  if (chunks <= 1) {
    scan_bad_parts(m, 1, total, result);
    return result;
  }
  std::vector<BadPartSet> partial(chunks, BadPartSet(n));
  std::vector<std::thread> workers;
  const std::uint64_t span = (total - 1 + chunks - 1) / chunks;
  for (std::uint64_t w = 0; w < chunks; ++w) {
    const std::uint64_t lo = 1 + w * span;
    const std::uint64_t hi = std::min(total, lo + span);
    if (lo >= hi) continue;
    workers.emplace_back([&, lo, hi, w] { scan_bad_parts(m, lo, hi, partial[w]); });
  }
  for (auto& t : workers) t.join();
  for (const auto& p : partial) result.merge(p);
  return result;
}

BadPartSet find_bad_parts(const CharacterTable& t, unsigned threads) { return find_bad_parts(SigmaMatrix(t), threads); }

Rational alpha_ratio(std::uint64_t bad_parts, int n) {
  if (n < 2) throw ArgumentError("alpha_ratio needs at least two classes");
  const BigInt denom = (BigInt(1) << (n - 1)) - 1;
  return make_rational(BigInt(std::to_string(bad_parts)), denom);
}

Rational alpha_ratio(const CharacterTable& t) { return alpha_ratio(find_bad_parts(t).count(), t.num_classes()); }

std::string format_percent(const Rational& fraction) {
  Rational scaled = fraction * 10000;
  BigInt hundredths = scaled.get_num() / scaled.get_den();  // truncates toward zero
  const bool negative = hundredths < 0;
  if (negative) hundredths = -hundredths;
  const BigInt whole = hundredths / 100;
  const BigInt frac = hundredths % 100;
  std::string f = frac.get_str();
  if (f.size() < 2) f = "0" + f;
  return (negative ? "-" : "") + whole.get_str() + "." + f;
}

}  // namespace supchar
