#include "clusterdt/instrument.hpp"

#include <map>
#include <mutex>

namespace clusterdt::instrument {

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, std::uint64_t>& registry() {
    static std::map<std::string, std::uint64_t> counters;
    return counters;
}

} // namespace

void bump(std::string_view op) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    ++registry()[std::string(op)];
}

std::uint64_t count(std::string_view op) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(std::string(op));
    return it == registry().end() ? 0 : it->second;
}

void reset() {
    std::lock_guard<std::mutex> lock(registry_mutex());
    registry().clear();
}

std::vector<std::pair<std::string, std::uint64_t>> snapshot() {
    std::lock_guard<std::mutex> lock(registry_mutex());
    return {registry().begin(), registry().end()};
}

const std::vector<std::string>& tracked_ops() {
    static const std::vector<std::string> ops = {
        // root-system data
        "cartan_matrix",
        "enumerate_positive_roots",
        "kostant_counts",
        "count_formulas",
        // seed mutation
        "mutate_matrix",
        "mutate_x",
        "mutate_y",
        "build_BA",
        "verify_reddening",
        // the transformation on positive points
        "dt_A",
        "dt_X",
        "ensemble_p",
        "frieze",
        "check_periodicity",
        "superunitary_check",
        // fixed points
        "solve_a",
        "closed_form_a",
        "b_from_a",
        "kappa_from",
        "u_from_kappa",
        "vinberg_gate",
        // linearization and spectra
        "build_LU",
        "M_matrix",
        "char_poly",
        "degree_poly",
        "exponents",
        "verify_exponents_match_degrees",
        "jacobian_check",
        "height_identity",
        "coxeter_spectrum",
        // tridiagonal twist model
        "continuants",
        "twist_Q",
        "twist_full",
        "vieta_fixed_candidates",
        "tnn_check",
        "twist_spectrum",
        "period_check_full",
    };
    return ops;
}

} // namespace clusterdt::instrument
