#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "binplot/dataset.hpp"
#include "binplot/tessellation.hpp"

namespace binplot {

enum class NormalizationMode { BinInternal, ClassInternal, Global };
enum class ScaleKind { Linear, Log };

std::string_view to_string(NormalizationMode mode) noexcept;
std::string_view to_string(ScaleKind scale) noexcept;

enum class OutOfDomainPolicy {
  Reject,  ///< throw Error{OutOfDomain} listing every offending index
  Drop,    ///< silently skip points outside the domain
};

struct AggregateOptions {
  OutOfDomainPolicy out_of_domain = OutOfDomainPolicy::Reject;
  unsigned threads = 1;
};

/// Per-bin, per-class raw counts. Storage is bin-major.
class BinSummaryGrid {
 public:
  BinSummaryGrid(BinLattice lattice, std::size_t class_count);

  const BinLattice& lattice() const { return lattice_; }
  std::size_t bin_count() const { return lattice_.bin_count(); }
  std::size_t class_count() const { return class_count_; }

  std::uint64_t count(BinIndex bin, ClassId cls) const { return counts_[bin * class_count_ + cls]; }
  std::span<const std::uint64_t> row(BinIndex bin) const {
    return {counts_.data() + bin * class_count_, class_count_};
  }
  std::uint64_t total(BinIndex bin) const { return totals_[bin]; }
  std::uint64_t class_total(ClassId cls) const { return class_totals_[cls]; }
  std::uint64_t grand_total() const { return grand_total_; }
  const std::vector<std::uint64_t>& totals() const { return totals_; }
  const std::vector<std::uint64_t>& class_totals() const { return class_totals_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  std::uint64_t max_count() const;
  std::uint64_t max_total() const;
  std::uint64_t class_max(ClassId cls) const;

  /// Grid restricted to a single class; other classes read zero.
  BinSummaryGrid only_class(ClassId cls) const;

  friend bool operator==(const BinSummaryGrid&, const BinSummaryGrid&) = default;

 private:
  friend BinSummaryGrid aggregate(const BinLattice&, const Dataset&, const AggregateOptions&);
  void recompute_totals();

  BinLattice lattice_;
  std::size_t class_count_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> totals_;
  std::vector<std::uint64_t> class_totals_;
  std::uint64_t grand_total_ = 0;
};

/// Counts may be accumulated on several threads; per-thread matrices are
/// merged by addition, so the result is independent of thread count.
BinSummaryGrid aggregate(const BinLattice& lattice, const Dataset& dataset,
                         const AggregateOptions& options = {});

/// Bin of every point, nullopt for points outside the domain.
std::vector<std::optional<BinIndex>> assign_points(const BinLattice& lattice,
                                                   const Dataset& dataset);

struct IntensityGrid {
  std::size_t bin_count = 0;
  std::size_t class_count = 0;
  NormalizationMode mode = NormalizationMode::Global;
  ScaleKind scale = ScaleKind::Linear;
  std::vector<double> values;

  double value(BinIndex bin, ClassId cls) const { return values[bin * class_count + cls]; }
  std::span<const double> row(BinIndex bin) const {
    return {values.data() + bin * class_count, class_count};
  }

  friend bool operator==(const IntensityGrid&, const IntensityGrid&) = default;
};

/// Map a raw count onto [0, 1] relative to the maximum of its normalization
/// unit. Log uses log(1 + n) so empty bins stay at zero. Zero maximum gives 0.
double attenuate(std::uint64_t count, std::uint64_t unit_max, ScaleKind scale);

/// Bin-internal divides by the bin's maximum, class-internal by the class's
/// maximum over bins, global by the overall maximum. Empty units give zeros.
IntensityGrid normalize(const BinSummaryGrid& grid, NormalizationMode mode,
                        ScaleKind scale = ScaleKind::Linear);

/// Per-bin total relative to the densest bin.
std::vector<double> bin_density(const BinSummaryGrid& grid, ScaleKind scale = ScaleKind::Linear);

/// Hamilton apportionment of `seats` over integer weights. Leftover seats go
/// to the largest fractional remainders, ties to the lower index.
std::vector<std::uint64_t> largest_remainder(std::span<const std::uint64_t> weights,
                                             std::uint64_t seats);

/// Per-class sample sizes for a bin: the budget is capped at the bin's size
/// and raised to the number of present classes, apportioned proportionally,
/// then every present class is floored at one by taking slots from the
/// largest quota.
std::vector<std::uint64_t> sample_quotas(std::span<const std::uint64_t> class_counts,
                                         std::uint64_t budget);

/// Representative subset of a bin's points, drawn reproducibly from `seed`.
/// Positions are pulled toward the bin centroid until a disc of
/// `disc_radius` (normalized-frame units) fits inside the bin polygon.
/// Output is grouped by class in registry order.
std::vector<LabeledPoint> sample_points(std::span<const LabeledPoint> bin_points,
                                        std::size_t class_count, std::uint64_t budget,
                                        const BinLattice& lattice, BinIndex bin,
                                        std::uint64_t seed, double disc_radius);

}  // namespace binplot
