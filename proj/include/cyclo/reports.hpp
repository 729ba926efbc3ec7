#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cyclo {

enum class Theory { HH, HH_co, HC, HC_co, HP, HP_co };

std::string theory_name(Theory t);
Theory theory_from_name(const std::string& name);

// Machine evidence that the periodicity operator has stabilized. `conclusive`
// requires two consecutive induced-iso flags plus a nonempty all-zero Hochschild
// window; the stable_*_rank fields carry iterated-S image ranks as partial data
// when the certificate is not conclusive.
struct StabilizationCertificate {
    std::vector<std::size_t> tested_degrees; // n where induced S: HC_{n+2} -> HC_n was tested
    std::vector<bool> iso_flags;
    std::size_t hh_window_lo = 1;
    std::size_t hh_window_hi = 0; // inclusive; empty when hi < lo
    std::vector<std::size_t> hh_window_dims;
    bool hh_window_vanishes = false;
    bool conclusive = false;
    std::size_t stable_even_rank = 0;
    std::size_t stable_odd_rank = 0;

    bool operator==(const StabilizationCertificate&) const = default;
};

struct HomologyReport {
    Theory theory = Theory::HH;
    std::vector<std::size_t> dims; // per degree 0..cutoff
    std::size_t cutoff = 0;
    std::vector<bool> reliable; // per degree
    std::optional<StabilizationCertificate> certificate;

    bool operator==(const HomologyReport&) const = default;
};

// One exactness check in ... -> HH_n -I-> HC_n -S-> HC_{n-2} -B-> HH_{n-1} -> ...
enum class SBISlot {
    HochschildNode, // HH_m: B in, I out
    CyclicNodeI,    // HC_m: I in, S out
    CyclicNodeS     // HC_m: S in, B out
};

struct SBINode {
    SBISlot slot = SBISlot::HochschildNode;
    std::size_t degree = 0;
    std::size_t rank_in = 0;
    std::size_t ker_out = 0;
    bool exact = false;

    bool operator==(const SBINode&) const = default;
};

struct SBICertificate {
    std::size_t cutoff = 0;
    std::vector<SBINode> nodes;
    std::vector<std::string> unchecked; // nodes outside the reliable range
    bool all_exact = false;
};

std::string sbi_node_label(const SBINode& node);

struct ResolutionReport {
    std::array<std::size_t, 3> dims = {0, 0, 0};     // complex dims in degrees 0..2
    std::array<std::size_t, 3> homology = {0, 0, 0}; // homology dims in degrees 0..2
    bool exact = false;                              // homology == [1, 0, 0]
};

} // namespace cyclo
