#include "residuum/sweep.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <thread>

#include "residuum/errors.hpp"

namespace residuum {

namespace {

struct Partial {
  MonomialIdeal ideal;
  std::uint64_t first = 0;  // rank of the first weight in lexicographic order
  std::uint64_t count = 0;
};

using Table = std::map<std::string, Partial>;

// The weight of lexicographic rank k in {1..pmax}^m; the first entry is most significant.
Weight weight_at(std::uint64_t k, std::size_t m, std::int64_t pmax) {
  std::vector<std::int64_t> w(m);
  for (std::size_t i = m; i-- > 0;) {
    w[i] = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(pmax)) + 1;
    k /= static_cast<std::uint64_t>(pmax);
  }
  return Weight(std::move(w));
}

void scan(const MonomialSeq& seq, std::int64_t pmax, std::uint64_t begin, std::uint64_t end, Table& table) {
  for (std::uint64_t k = begin; k < end; ++k) {
    auto ideal = annihilator(seq, weight_at(k, seq.size(), pmax));
    auto key = ideal.to_string();
    auto it = table.find(key);
    if (it == table.end())
      table.emplace(std::move(key), Partial{std::move(ideal), k, 1});
    else
      ++it->second.count;
  }
}

}  // namespace

SweepResult enumerate_annihilators(const MonomialSeq& seq, std::int64_t pmax, const SweepOptions& options) {
  if (pmax < 1) throw DomainError("pmax must be >= 1");
  std::uint64_t total = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(pmax), &total)) overflow = true;
  }
  if (overflow) throw ScaleRefusedError("pmax^m does not fit in 64 bits");
  if (total > options.guard && !options.force)
    throw ScaleRefusedError("sweep over " + std::to_string(total) + " weights exceeds the limit of " +
                            std::to_string(options.guard) + "; pass --force to run it anyway");

  const std::uint64_t workers = std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(total, 1));
  std::vector<Table> tables(workers);
  if (workers == 1) {
    scan(seq, pmax, 0, total, tables[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers, end = total * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          scan(seq, pmax, begin, end, tables[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Merge in worker order; chunks are contiguous, so the first occurrence
  // of a key in the lowest worker holds the smallest rank.
  Table merged;
  for (auto& table : tables) {
    for (auto& [key, part] : table) {
      auto it = merged.find(key);
      if (it == merged.end()) {
        merged.emplace(key, std::move(part));
      } else {
        it->second.first = std::min(it->second.first, part.first);
        it->second.count += part.count;
      }
    }
  }

  SweepResult result;
  result.pmax = pmax;
  result.weights = total;
  std::vector<Partial> parts;
  for (auto& [key, part] : merged) parts.push_back(std::move(part));
  std::sort(parts.begin(), parts.end(), [](const Partial& a, const Partial& b) { return a.first < b.first; });
  for (auto& part : parts)
    result.classes.push_back(SweepClass{std::move(part.ideal), weight_at(part.first, seq.size(), pmax), part.count});
  return result;
}

}  // namespace residuum
