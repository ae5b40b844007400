#include <algorithm>
#include <set>

#include "cozero/error.hpp"
#include "cozero/harness.hpp"

namespace cozero {

void validate(const CorpusConfig& config) {
  if (!config.cyclic && !config.products && !config.galois && config.custom.empty())
    throw Error(ErrorKind::invalid_spec, "corpus: at least one family required");
  if (config.max_order > kDefaultOrderCap || config.max_cyclic_n > kDefaultOrderCap)
    throw Error(ErrorKind::cap_exceeded,
                "corpus: orders are capped at " + std::to_string(kDefaultOrderCap));
  if (config.max_order < 2 && (config.products || config.galois))
    throw Error(ErrorKind::invalid_spec, "corpus: max_order must be >= 2");
}

namespace {

void ordered_factorizations(std::size_t remaining_cap, std::vector<std::uint64_t>& current,
                            std::size_t current_order,
                            std::vector<std::vector<std::uint64_t>>& out) {
  if (current.size() >= 2) out.push_back(current);
  for (std::uint64_t f = 2; current_order * f <= remaining_cap; ++f) {
    current.push_back(f);
    ordered_factorizations(remaining_cap, current, current_order * f, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<RingSpec> corpus_specs(const CorpusConfig& config) {
  validate(config);
  std::vector<RingSpec> specs;
  if (config.cyclic)
    for (std::uint64_t n = 2; n <= config.max_cyclic_n; ++n) specs.push_back(RingSpec::cyclic(n));
  if (config.products) {
    std::vector<std::vector<std::uint64_t>> lists;
    std::vector<std::uint64_t> current;
    ordered_factorizations(config.max_order, current, 1, lists);
    auto order = [](const std::vector<std::uint64_t>& l) {
      std::uint64_t n = 1;
      for (auto f : l) n *= f;
      return n;
    };
    std::stable_sort(lists.begin(), lists.end(), [&](const auto& a, const auto& b) {
      if (order(a) != order(b)) return order(a) < order(b);
      return a < b;
    });
    for (auto& l : lists) specs.push_back(RingSpec::product(l));
  }
  if (config.galois) {
    std::vector<std::pair<std::uint64_t, RingSpec>> fields;
    for (std::uint64_t p = 2; p * p <= config.max_order; ++p) {
      if (!is_prime(p)) continue;
      std::uint64_t q = p * p;
      for (std::uint64_t k = 2; q <= config.max_order; ++k, q *= p)
        fields.emplace_back(q, RingSpec::galois(p, k));
    }
    std::stable_sort(fields.begin(), fields.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& f : fields) specs.push_back(f.second);
  }
  for (const auto& s : config.custom) specs.push_back(s);

  std::set<std::string> seen;
  std::vector<RingSpec> unique;
  for (auto& s : specs)
    if (seen.insert(to_string(s)).second) unique.push_back(std::move(s));
  return unique;
}

std::vector<RingPtr> generate_corpus(const CorpusConfig& config) {
  std::vector<RingPtr> rings;
  for (const auto& spec : corpus_specs(config)) rings.push_back(build_ring(spec));
  return rings;
}

}  // namespace cozero
