#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

// Named forbidden-subgraph gallery. Cycle vertices are u1..uk = 0..k-1;
// attached vertices follow in the order listed.
enum class PatternId { C7, C9, H1, H2, H3, T0, T1, T2, T3, T4, T5, T6 };

inline constexpr std::array kAllPatterns{PatternId::C7, PatternId::C9, PatternId::H1, PatternId::H2,
                                         PatternId::H3, PatternId::T0, PatternId::T1, PatternId::T2,
                                         PatternId::T3, PatternId::T4, PatternId::T5, PatternId::T6};

std::string_view pattern_name(PatternId id);
std::optional<PatternId> pattern_from_name(std::string_view name);

Graph pattern(PatternId id);

// Reference eigenvalue row (three decimals), empty for T0 which has none.
std::span<const double> reference_spectrum(PatternId id);
// 1 for C7/H1..H3, 2 for C9/T1..T6, 0 for T0.
int reference_table(PatternId id);

}  // namespace spex
