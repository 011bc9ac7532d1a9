#pragma once

#include <iosfwd>
#include <span>

#include "topocompat/compat.hpp"

namespace topo {

/// Header `task,system,s_or_n,reach,n,p,c_exact_num,c_exact_den,c_rounded`
/// followed by one row per report.
void write_csv(std::ostream& out, std::span<const CompatibilityReport> reports);

/// Grid with one column per system parameter and one row per reach, cells
/// `p; C`. Intended for the output of compatibility_table().
void write_markdown(std::ostream& out,
                    std::span<const CompatibilityReport> reports);

/// `task=star system=hypercube:5 reach=2 n=32 p=16 c=0.5000`, one per line.
void write_text(std::ostream& out, std::span<const CompatibilityReport> reports);

}  // namespace topo
