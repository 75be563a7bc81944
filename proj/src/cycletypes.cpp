#include "symcover/cycletypes.hpp"

#include "symcover/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <string>

namespace symcover {

PartitionTable::PartitionTable(long v_max) : v_max_(v_max) {
  if (v_max < 0) throw InvalidParameters("PartitionTable requires v_max >= 0");
  rows_.resize(static_cast<std::size_t>(v_max) + 1);
  rows_[0].assign(1, BigInt(1));
  for (long n = 1; n <= v_max; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (long m = 2; m <= n; ++m) {
      row[static_cast<std::size_t>(m)] = row[static_cast<std::size_t>(m - 1)] + count(n - m, std::min(m, n - m));
    }
  }
}

const BigInt& PartitionTable::count(long n, long m) const {
  if (n < 0 || n > v_max_) throw InvalidParameters("PartitionTable: n out of range");
  m = std::clamp(m, 0L, n);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

CycleType PartitionTable::unrank(long v, const BigInt& rank) const {
  if (v < 2) throw InvalidParameters("cycle types need v >= 2");
  if (rank < 0 || rank >= total(v)) throw InvalidParameters("unrank: rank out of range");
  std::vector<int> parts;
  BigInt r = rank;
  long n = v;
  long m = v;
  while (n > 0) {
    while (r < count(n, m - 1)) --m;
    r -= count(n, m - 1);
    parts.push_back(static_cast<int>(m));
    n -= m;
    m = std::min(m, n);
  }
  return CycleType(std::move(parts));
}

BigInt PartitionTable::rank(const CycleType& ct) const {
  BigInt r = 0;
  long n = ct.sum();
  const auto& parts = ct.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    r += count(n, *it - 1);
    n -= *it;
  }
  return r;
}

BigInt count_feasible(long v) {
  if (v < 2) throw InvalidParameters("count_feasible requires v >= 2");
  return PartitionTable(v).total(v);
}

namespace {

void extend_lex(std::vector<int>& prefix, std::size_t t, int min_part, long remaining,
                const std::function<void(const CycleType&)>& visit) {
  const std::size_t slots = t - prefix.size();
  if (slots == 1) {
    if (remaining >= min_part) {
      prefix.push_back(static_cast<int>(remaining));
      visit(CycleType(prefix));
      prefix.pop_back();
    }
    return;
  }
  for (int c = min_part; static_cast<long>(c) * static_cast<long>(slots) <= remaining; ++c) {
    prefix.push_back(c);
    extend_lex(prefix, t, c, remaining - c, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_feasible(long v, const std::function<void(const CycleType&)>& visit) {
  if (v < 2) throw InvalidParameters("for_each_feasible requires v >= 2");
  std::vector<int> prefix;
  for (std::size_t t = 1; static_cast<long>(t) * 2 <= v; ++t) extend_lex(prefix, t, 2, v, visit);
}

std::vector<CycleType> enumerate_feasible(long v) {
  std::vector<CycleType> out;
  for_each_feasible(v, [&](const CycleType& ct) { out.push_back(ct); });
  return out;
}

std::vector<CycleType> sample_feasible(long v, std::size_t count, std::uint64_t seed) {
  const PartitionTable table(v);
  const BigInt& total = table.total(v);
  if (BigInt(static_cast<unsigned long>(count)) > total) {
    throw InvalidParameters("cannot sample " + std::to_string(count) + " distinct cycle types of " +
                            std::to_string(v) + "; only " + total.get_str() + " exist");
  }
  if (BigInt(static_cast<unsigned long>(count)) == total) return enumerate_feasible(v);

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  std::vector<CycleType> out;
  out.reserve(count);
  if (total <= BigInt(static_cast<unsigned long>(2 * count))) {
    // Dense case: partial Fisher-Yates over all ranks.
    const std::size_t n = mpz_get_ui(total.get_mpz_t());
    std::vector<std::size_t> ranks(n);
    std::iota(ranks.begin(), ranks.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
      const BigInt span(static_cast<unsigned long>(n - i));
      const BigInt offset = rng.get_z_range(span);
      const std::size_t j = i + mpz_get_ui(offset.get_mpz_t());
      std::swap(ranks[i], ranks[j]);
      out.push_back(table.unrank(v, BigInt(static_cast<unsigned long>(ranks[i]))));
    }
    return out;
  }
  std::set<BigInt> seen;
  while (out.size() < count) {
    BigInt rank = rng.get_z_range(total);
    if (!seen.insert(rank).second) continue;
    out.push_back(table.unrank(v, rank));
  }
  return out;
}

std::vector<CycleType> draw_feasible(long v, std::size_t count, std::uint64_t seed) {
  const PartitionTable table(v);
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  std::vector<CycleType> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(table.unrank(v, rng.get_z_range(table.total(v))));
  return out;
}

namespace {

class CycleTypeParser {
 public:
  explicit CycleTypeParser(std::string_view text) : text_(text) {}

  CycleType parse() {
    skip_space();
    const bool bracketed = accept('[');
    std::vector<int> parts;
    do {
      const long part = number("cycle length");
      long repeat = 1;
      skip_space();
      if (accept('^')) repeat = number("exponent");
      if (part < 2) fail("cycle lengths must be at least 2");
      if (repeat < 1) fail("exponent must be positive");
      parts.insert(parts.end(), static_cast<std::size_t>(repeat), static_cast<int>(part));
      skip_space();
    } while (accept(','));
    if (bracketed && !accept(']')) fail("missing ']'");
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return CycleType(std::move(parts));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidParameters("malformed cycle type '" + std::string(text_) + "': " + why);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long number(const char* what) {
    skip_space();
    long value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_) fail(std::string("expected ") + what);
    if (value > 1000000) fail(std::string(what) + " too large");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CycleType parse_cycle_type(std::string_view text) { return CycleTypeParser(text).parse(); }

}  // namespace symcover
