#pragma once

#include "trichi/montecarlo.hpp"
#include "trichi/phase_space.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace trichi {

/// Scientific notation with 12 significant digits, locale-independent
/// (std::to_chars). All exported numbers use this form.
std::string format_sci(double v);

/// The double nearest to the 12-significant-digit decimal form of v.
/// JSON exports carry these values so CSV and JSON agree exactly.
double round_sci(double v);

/// CSV: header `a_bar,b_bar,c_bar,chi,segment,in_triangle`, one row per
/// cell, row-major. in_triangle is 0/1, segment 0 (nodal) or 1..6.
void write_csv(const PhaseGrid& g, std::ostream& os);
void write_json(const PhaseGrid& g, std::ostream& os);

/// CSV: header `bin_lower,bin_upper,count`.
void write_csv(const std::vector<HistogramBin>& h, std::ostream& os);
void write_json(const std::vector<HistogramBin>& h, std::ostream& os);

/// CSV: header `rel_error,chi_threshold`.
void write_csv(const std::vector<ConfidenceRow>& rows, std::ostream& os);
void write_json(const std::vector<ConfidenceRow>& rows, std::ostream& os);

}  // namespace trichi
