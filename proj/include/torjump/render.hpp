#pragma once

#include "torjump/jumps.hpp"
#include "torjump/zeta.hpp"

#include <string>

namespace torjump {

enum class OutputFormat { text, json, csv, tex };

OutputFormat parse_format(const std::string& s);

// "0:3, 1/2:3"
std::string render_jumps_text(const JumpMultiset& m);
std::string render_jumps_csv(const JumpMultiset& m);
std::string render_jumps_tex(const JumpMultiset& m);

std::string render_d_jumps_text(const DJumpMultiset& m);
std::string render_d_jumps_csv(const DJumpMultiset& m);
std::string render_d_jumps_tex(const DJumpMultiset& m);

std::string render_series_text(const RationalSeries& s, long long preview_terms = 0);
std::string render_series_tex(const RationalSeries& s);

} // namespace torjump
