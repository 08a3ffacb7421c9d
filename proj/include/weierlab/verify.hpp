#ifndef WEIERLAB_VERIFY_HPP
#define WEIERLAB_VERIFY_HPP

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weierlab/lattice.hpp"
#include "weierlab/modular.hpp"

namespace weierlab
{

/// Outcome of one identity check: the largest absolute residual over its samples.
struct IdentityCheck {
    std::string name;
    std::int64_t sample_count = 0;
    double max_residual = 0;
    double tolerance = 0;
    /// max_residual <= tolerance (false if any residual was NaN)
    bool passed = false;
};

/// Deterministic sampling of (tau, z) pairs.
struct SampleSpec {
    int tau_count = 8;
    int z_count = 16;
    std::uint64_t seed = 42;
    double re_tau_min = -0.5;
    double re_tau_max = 0.5;
    double im_tau_min = 0.8;
    double im_tau_max = 2.0;
    /// z is drawn uniformly from the disk |z| <= z_radius.
    double z_radius = 1.5;

    void validate(const TruncationPolicy &policy) const;
};

/// Registry entry: the default tolerance of a check and the exclusion radius around lattice
/// points used when sampling z for it.
struct CheckInfo {
    std::string_view name;
    double tolerance;
    double min_lattice_distance;
};

/// The twelve checks, in report order.
std::span<const CheckInfo> check_registry();

/// Throws UnknownCheckName.
const CheckInfo &find_check(std::string_view name);

/// Runs the selected checks (all of them when selection is empty), in registry order.
/**
 * Each check draws its samples from its own stream derived from spec.seed and its registry
 * index, so a check's result does not depend on which other checks are selected.
 * Default tolerances are multiplied by tolerance_scale.
 */
std::vector<IdentityCheck> run_suite(const SampleSpec &spec, const TruncationPolicy &policy,
                                     const QSeriesTerms &terms, const std::set<std::string> &selection,
                                     double tolerance_scale = 1.0);

/// {"checks":[{"name":..,"samples":..,"max_residual":..,"tolerance":..,"passed":..},..],"all_passed":..}
std::string report_json(std::span<const IdentityCheck> checks);

} // namespace weierlab

#endif
