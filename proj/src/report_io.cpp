#include "topocompat/report_io.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace topo {

namespace {

template <class T>
void push_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

void write_csv(std::ostream& out,
               std::span<const CompatibilityReport> reports) {
  out << "task,system,s_or_n,reach,n,p,c_exact_num,c_exact_den,c_rounded\n";
  for (const auto& r : reports) {
    const auto s_or_n = r.system.kind == TopologyKind::custom
                            ? r.order_n
                            : std::uint64_t{r.system.parameter};
    out << to_string(r.task) << ',' << to_string(r.system.kind) << ','
        << s_or_n << ',' << r.reach << ',' << r.order_n << ','
        << r.potential_p << ',' << r.index.num() << ',' << r.index.den()
        << ',' << r.index_rounded << '\n';
  }
}

void write_markdown(std::ostream& out,
                    std::span<const CompatibilityReport> reports) {
  if (reports.empty()) return;
  std::vector<std::uint32_t> columns, rows;
  for (const auto& r : reports) {
    push_unique(columns, r.system.parameter);
    push_unique(rows, r.reach);
  }
  const bool hyper = reports.front().system.kind == TopologyKind::hypercube;
  const char* tag = reports.front().task == TaskKind::star ? "Z" : "R";

  const auto cell = [&](std::uint32_t col, std::uint32_t reach) {
    for (const auto& r : reports)
      if (r.system.parameter == col && r.reach == reach) return &r;
    return static_cast<const CompatibilityReport*>(nullptr);
  };

  out << '|' << (hyper ? " s " : " system ") << '|';
  for (auto c : columns) out << ' ' << c << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < columns.size(); ++i) out << "---|";
  out << '\n' << (hyper ? "| n = 2^s |" : "| n |");
  for (auto c : columns) {
    const auto* r = cell(c, rows.front());
    out << ' ' << (r ? std::to_string(r->order_n) : std::string()) << " |";
  }
  out << '\n';
  for (auto reach : rows) {
    out << "| p_" << tag << "(H_s)_" << reach << "; C_" << tag << "(H_s)_"
        << reach << " |";
    for (auto c : columns) {
      const auto* r = cell(c, reach);
      if (r)
        out << ' ' << r->potential_p << "; " << r->index_rounded << " |";
      else
        out << "  |";
    }
    out << '\n';
  }
}

void write_text(std::ostream& out,
                std::span<const CompatibilityReport> reports) {
  for (const auto& r : reports)
    out << "task=" << to_string(r.task) << " system=" << r.system.to_string()
        << " reach=" << r.reach << " n=" << r.order_n
        << " p=" << r.potential_p << " c=" << r.index_rounded << '\n';
}

}  // namespace topo
