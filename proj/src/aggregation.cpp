#include "binplot/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "binplot/error.hpp"
#include "binplot/random.hpp"

namespace binplot {

std::string_view to_string(NormalizationMode mode) noexcept {
  switch (mode) {
    case NormalizationMode::BinInternal: return "bin-internal";
    case NormalizationMode::ClassInternal: return "class-internal";
    case NormalizationMode::Global: return "global";
  }
  return "global";
}

std::string_view to_string(ScaleKind scale) noexcept {
  return scale == ScaleKind::Log ? "log" : "linear";
}

BinSummaryGrid::BinSummaryGrid(BinLattice lattice, std::size_t class_count)
    : lattice_(std::move(lattice)),
      class_count_(class_count),
      counts_(lattice_.bin_count() * class_count, 0),
      totals_(lattice_.bin_count(), 0),
      class_totals_(class_count, 0) {}

void BinSummaryGrid::recompute_totals() {
  std::fill(totals_.begin(), totals_.end(), 0);
  std::fill(class_totals_.begin(), class_totals_.end(), 0);
  grand_total_ = 0;
  for (std::size_t b = 0; b < bin_count(); ++b) {
    for (std::size_t c = 0; c < class_count_; ++c) {
      const auto n = counts_[b * class_count_ + c];
      totals_[b] += n;
      class_totals_[c] += n;
      grand_total_ += n;
    }
  }
}

std::uint64_t BinSummaryGrid::max_count() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

std::uint64_t BinSummaryGrid::max_total() const {
  return totals_.empty() ? 0 : *std::max_element(totals_.begin(), totals_.end());
}

std::uint64_t BinSummaryGrid::class_max(ClassId cls) const {
  std::uint64_t m = 0;
  for (std::size_t b = 0; b < bin_count(); ++b) m = std::max(m, count(b, cls));
  return m;
}

BinSummaryGrid BinSummaryGrid::only_class(ClassId cls) const {
  BinSummaryGrid out(lattice_, class_count_);
  for (std::size_t b = 0; b < bin_count(); ++b) {
    out.counts_[b * class_count_ + cls] = count(b, cls);
  }
  out.recompute_totals();
  return out;
}

BinSummaryGrid aggregate(const BinLattice& lattice, const Dataset& dataset,
                         const AggregateOptions& options) {
  const auto& pts = dataset.points();
  const std::size_t k = dataset.class_count();
  BinSummaryGrid grid(lattice, k);

  const unsigned threads = std::max(1u, options.threads);
  const std::size_t chunk = (pts.size() + threads - 1) / threads;
  std::vector<std::vector<std::uint64_t>> partial(threads);
  std::vector<std::vector<std::size_t>> rejected(threads);

  auto work = [&](unsigned t) {
    auto& local = partial[t];
    local.assign(lattice.bin_count() * k, 0);
    const std::size_t begin = std::min(pts.size(), t * chunk);
    const std::size_t end = std::min(pts.size(), begin + chunk);
    for (std::size_t i = begin; i < end; ++i) {
      const auto bin = lattice.try_assign(pts[i].position());
      if (!bin) {
        rejected[t].push_back(i);
        continue;
      }
      ++local[*bin * k + pts[i].cls];
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  std::vector<std::size_t> outside;
  for (auto& r : rejected) outside.insert(outside.end(), r.begin(), r.end());
  if (!outside.empty() && options.out_of_domain == OutOfDomainPolicy::Reject) {
    std::string msg = std::to_string(outside.size()) + " point(s) outside the domain, indices:";
    for (std::size_t i = 0; i < outside.size() && i < 20; ++i) msg += " " + std::to_string(outside[i]);
    if (outside.size() > 20) msg += " ...";
    throw Error(Errc::OutOfDomain, msg, std::move(outside));
  }

  for (const auto& local : partial) {
    for (std::size_t i = 0; i < local.size(); ++i) grid.counts_[i] += local[i];
  }
  grid.recompute_totals();
  return grid;
}

std::vector<std::optional<BinIndex>> assign_points(const BinLattice& lattice,
                                                   const Dataset& dataset) {
  std::vector<std::optional<BinIndex>> out;
  out.reserve(dataset.size());
  for (const auto& p : dataset.points()) out.push_back(lattice.try_assign(p.position()));
  return out;
}

double attenuate(std::uint64_t count, std::uint64_t unit_max, ScaleKind scale) {
  if (unit_max == 0) return 0.0;
  if (scale == ScaleKind::Log) {
    return std::log1p(static_cast<double>(count)) / std::log1p(static_cast<double>(unit_max));
  }
  return static_cast<double>(count) / static_cast<double>(unit_max);
}

IntensityGrid normalize(const BinSummaryGrid& grid, NormalizationMode mode, ScaleKind scale) {
  IntensityGrid out;
  out.bin_count = grid.bin_count();
  out.class_count = grid.class_count();
  out.mode = mode;
  out.scale = scale;
  out.values.assign(out.bin_count * out.class_count, 0.0);

  std::vector<std::uint64_t> class_max(grid.class_count(), 0);
  if (mode == NormalizationMode::ClassInternal) {
    for (std::size_t c = 0; c < grid.class_count(); ++c) class_max[c] = grid.class_max(static_cast<ClassId>(c));
  }
  const std::uint64_t global_max = grid.max_count();

  for (std::size_t b = 0; b < grid.bin_count(); ++b) {
    const auto row = grid.row(b);
    std::uint64_t bin_max = 0;
    if (mode == NormalizationMode::BinInternal) bin_max = *std::max_element(row.begin(), row.end());
    for (std::size_t c = 0; c < grid.class_count(); ++c) {
      std::uint64_t unit = global_max;
      if (mode == NormalizationMode::BinInternal) unit = bin_max;
      if (mode == NormalizationMode::ClassInternal) unit = class_max[c];
      out.values[b * out.class_count + c] = attenuate(row[c], unit, scale);
    }
  }
  return out;
}

std::vector<double> bin_density(const BinSummaryGrid& grid, ScaleKind scale) {
  std::vector<double> out(grid.bin_count(), 0.0);
  const auto m = grid.max_total();
  for (std::size_t b = 0; b < grid.bin_count(); ++b) out[b] = attenuate(grid.total(b), m, scale);
  return out;
}

std::vector<std::uint64_t> largest_remainder(std::span<const std::uint64_t> weights,
                                             std::uint64_t seats) {
  std::vector<std::uint64_t> out(weights.size(), 0);
  unsigned __int128 sum = 0;
  for (auto w : weights) sum += w;
  if (sum == 0 || seats == 0) return out;

  std::vector<unsigned __int128> remainder(weights.size(), 0);
  std::uint64_t given = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const unsigned __int128 num = static_cast<unsigned __int128>(weights[i]) * seats;
    out[i] = static_cast<std::uint64_t>(num / sum);
    remainder[i] = num % sum;
    given += out[i];
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t i = 0; given < seats; ++i, ++given) ++out[order[i % order.size()]];
  return out;
}

std::vector<std::uint64_t> sample_quotas(std::span<const std::uint64_t> class_counts,
                                         std::uint64_t budget) {
  std::uint64_t total = 0;
  std::uint64_t present = 0;
  for (auto n : class_counts) {
    total += n;
    if (n > 0) ++present;
  }
  const std::uint64_t seats = std::max(std::min(budget, total), present);
  auto quotas = largest_remainder(class_counts, seats);
  for (std::size_t c = 0; c < class_counts.size(); ++c) {
    if (class_counts[c] == 0 || quotas[c] > 0) continue;
    std::size_t donor = 0;
    for (std::size_t d = 1; d < quotas.size(); ++d) {
      if (quotas[d] > quotas[donor]) donor = d;
    }
    --quotas[donor];
    ++quotas[c];
  }
  return quotas;
}

std::vector<LabeledPoint> sample_points(std::span<const LabeledPoint> bin_points,
                                        std::size_t class_count, std::uint64_t budget,
                                        const BinLattice& lattice, BinIndex bin,
                                        std::uint64_t seed, double disc_radius) {
  std::vector<std::vector<std::size_t>> by_class(class_count);
  for (std::size_t i = 0; i < bin_points.size(); ++i) {
    if (bin_points[i].cls >= class_count) {
      throw Error(Errc::InvalidParameter, "sampled point references unknown class");
    }
    by_class[bin_points[i].cls].push_back(i);
  }
  std::vector<std::uint64_t> counts(class_count);
  for (std::size_t c = 0; c < class_count; ++c) counts[c] = by_class[c].size();
  const auto quotas = sample_quotas(counts, budget);

  Polygon frame_poly;
  for (const auto& v : lattice.bin_polygon(bin)) frame_poly.push_back(lattice.to_frame(v));
  const Point2 center = centroid(frame_poly);

  Rng rng(seed);
  std::vector<LabeledPoint> out;
  for (std::size_t c = 0; c < class_count; ++c) {
    auto& idx = by_class[c];
    // Partial Fisher-Yates: the first quota slots become the selection.
    const std::size_t take = static_cast<std::size_t>(std::min<std::uint64_t>(quotas[c], idx.size()));
    for (std::size_t i = 0; i < take; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
      std::swap(idx[i], idx[j]);
    }
    for (std::size_t i = 0; i < take; ++i) {
      LabeledPoint p = bin_points[idx[i]];
      const Point2 original = lattice.to_frame(p.position());
      const Point2 f = pull_inside(frame_poly, center, original, disc_radius);
      if (!(f == original)) {
        const Point2 d = lattice.from_frame(f);
        p.x = d.x;
        p.y = d.y;
      }
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace binplot
