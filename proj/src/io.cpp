#include "skein/io.hpp"

#include <sstream>

namespace skein::io {

namespace {

json terms_json(const std::vector<std::pair<int, alg::Int>>& terms) {
  json arr = json::array();
  for (const auto& [e, c] : terms) arr.push_back({e, c.get_str()});
  return arr;
}

}  // namespace

json laurent_json(const alg::LaurentPoly& p) {
  return {{"var", "A"}, {"terms", terms_json(p.terms())}};
}

json delta_json(const alg::DeltaPoly& p) {
  return {{"var", "delta"}, {"terms", terms_json(p.terms())}};
}

json rational_json(const alg::RationalFunc& r) {
  return {{"num", laurent_json(r.num())}, {"den", laurent_json(r.den())}};
}

std::string rational_text(const alg::RationalFunc& r) { return r.text(); }

std::string matching_text(const tl::PlanarMatching& m) {
  std::ostringstream os;
  auto local = [&](int from, int p) {
    // Same-side partners print as a bare local index, cross-side partners
    // carry a b/t tag.
    const bool from_bottom = m.is_bottom(from);
    const bool to_bottom = m.is_bottom(p);
    const int idx = to_bottom ? p + 1 : p - m.n_bottom() + 1;
    if (from_bottom == to_bottom) return std::to_string(idx);
    return std::string(to_bottom ? "b" : "t") + std::to_string(idx);
  };
  os << '[';
  for (int i = 0; i < m.n_bottom(); ++i) {
    if (i) os << ',';
    os << local(i, m.partner(i));
  }
  os << '|';
  for (int j = 0; j < m.n_top(); ++j) {
    if (j) os << ',';
    os << local(m.n_bottom() + j, m.partner(m.n_bottom() + j));
  }
  os << ']';
  return os.str();
}

json matching_json(const tl::PlanarMatching& m) {
  auto tag = [&](int p) {
    if (m.is_bottom(p)) return "b" + std::to_string(p + 1);
    return "t" + std::to_string(p - m.n_bottom() + 1);
  };
  json pairs = json::array();
  for (int p = 0; p < m.points(); ++p)
    if (p < m.partner(p)) pairs.push_back({tag(p), tag(m.partner(p))});
  return {{"n_bottom", m.n_bottom()}, {"n_top", m.n_top()}, {"pairs", pairs}};
}

std::string tuple_text(const bases::StepTuple& t) {
  std::ostringstream os;
  for (int i = 0; i < t.n; ++i) {
    if (i) os << ',';
    os << t.a[i];
  }
  return os.str();
}

json tuple_json(const bases::StepTuple& t) {
  return {{"n", t.n}, {"h", t.h}, {"a", t.a}};
}

json path_json(const paths::DyckPath& p, int mark) {
  json j = {{"n", p.length()}, {"h", p.end_height()}, {"steps", p.steps()}};
  if (mark >= 0) j["mark"] = mark;
  return j;
}

namespace {

const char* basis_name(gram::Basis b) { return b == gram::Basis::B ? "B" : "D"; }
const char* kind_name(gram::MeanderKind k) {
  return k == gram::MeanderKind::S ? "S" : "T";
}

json labels_json(const std::vector<bases::StepTuple>& labels) {
  json arr = json::array();
  for (const auto& t : labels) arr.push_back(t.a);
  return arr;
}

}  // namespace

json gram_matrix_json(const gram::GramMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(rational_json(e));
    rows.push_back(std::move(r));
  }
  return {{"n", m.n},
          {"h", m.h},
          {"basis", basis_name(m.basis)},
          {"labels", labels_json(m.labels)},
          {"entries", rows}};
}

json meander_matrix_json(const gram::MeanderMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& e : row)
      r.push_back({{"num", delta_json(e)}, {"den", delta_json(alg::DeltaPoly(1))}});
    rows.push_back(std::move(r));
  }
  return {{"n", m.n},
          {"h", m.h},
          {"basis", kind_name(m.kind)},
          {"labels", labels_json(m.labels)},
          {"entries", rows}};
}

namespace {

std::string table_of(const std::vector<bases::StepTuple>& labels,
                     const std::vector<std::vector<std::string>>& cells) {
  std::size_t label_w = 0, cell_w = 0;
  std::vector<std::string> names;
  for (const auto& t : labels) {
    names.push_back(tuple_text(t));
    label_w = std::max(label_w, names.back().size());
  }
  for (const auto& row : cells)
    for (const auto& c : row) cell_w = std::max(cell_w, c.size());
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    os << '(' << names[i] << ')' << std::string(label_w - names[i].size(), ' ')
       << " |";
    for (const auto& c : cells[i])
      os << ' ' << std::string(cell_w - c.size(), ' ') << c;
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string gram_matrix_table(const gram::GramMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : m.entries) {
    cells.emplace_back();
    for (const auto& e : row) cells.back().push_back(e.text());
  }
  return table_of(m.labels, cells);
}

std::string meander_matrix_table(const gram::MeanderMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : m.entries) {
    cells.emplace_back();
    for (const auto& e : row) cells.back().push_back(e.text());
  }
  return table_of(m.labels, cells);
}

json det_json(const alg::RationalFunc& det, const gram::DetFactored& f) {
  json ratio = json::array();
  for (const auto& [k, a] : f.ratio_powers) ratio.push_back({k, a});
  return {{"det", rational_json(det)},
          {"factored",
           {{"delta_h_power", f.delta_h_power}, {"ratio_powers", ratio}}}};
}

json series_json(const gf::TruncSeries& s) {
  json coeffs = json::array();
  for (int n = 0; n <= s.order(); ++n) {
    json qt = json::array();
    for (const auto& [m, c] : s.coeff(n).terms()) qt.push_back({m, c.get_str()});
    coeffs.push_back({{"q_terms", std::move(qt)}});
  }
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

std::string series_table(const gf::TruncSeries& s) {
  int max_q = 0;
  for (int n = 0; n <= s.order(); ++n)
    if (!s.coeff(n).is_zero())
      max_q = std::max(max_q, s.coeff(n).terms().back().first);
  std::ostringstream os;
  os << "n\\m";
  for (int m = 0; m <= max_q; ++m) os << '\t' << m;
  os << '\n';
  for (int n = 0; n <= s.order(); ++n) {
    os << n;
    for (int m = 0; m <= max_q; ++m) os << '\t' << s.coeff(n).coeff(m).get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace skein::io
