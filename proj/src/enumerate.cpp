#include "wwlab/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wwlab {

GapMatrix::GapMatrix(std::vector<Colour> alphabet, const std::vector<std::vector<int>>& rows)
    : alphabet_(std::move(alphabet)) {
  index_.fill(-1);
  const std::size_t n = alphabet_.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto& slot_index = index_[static_cast<std::size_t>(alphabet_[i])];
    if (slot_index >= 0) throw std::invalid_argument("GapMatrix: repeated colour");
    slot_index = static_cast<int>(i);
  }
  if (rows.size() != n) throw std::invalid_argument("GapMatrix: row count differs from alphabet size");
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("GapMatrix: matrix is not square");
    for (int e : row) {
      if (e < 0) throw std::invalid_argument("GapMatrix: negative entry");
      entries_.push_back(e);
    }
  }
}

std::size_t GapMatrix::index(Colour c) const {
  const int i = index_[static_cast<std::size_t>(c)];
  if (i < 0) throw std::invalid_argument("unknown colour " + std::string(colour_name(c)) + " for this matrix");
  return static_cast<std::size_t>(i);
}

EnumSpec::EnumSpec(GapMatrix matrix)
    : matrix_(std::move(matrix)), min_part_(matrix_.colours().size(), 1), classes_(matrix_.colours().size()) {
  // Kahn's algorithm over "x may follow y at equal value" edges between
  // distinct colours. A cycle would let one multiset appear in two orders.
  const auto& cs = matrix_.colours();
  const std::size_t n = cs.size();
  std::vector<int> pending(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && matrix_(cs[x], cs[y]) == 0) ++pending[y];
  std::vector<bool> done(n, false);
  // Kahn lists a colour before every colour that may follow it at equal
  // value; the transfer recursion needs the followers first.
  std::vector<Colour> order;
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t pick = n;
    for (std::size_t x = 0; x < n && pick == n; ++x)
      if (!done[x] && pending[x] == 0) pick = x;
    if (pick == n) throw std::invalid_argument("EnumSpec: equal-value order is cyclic");
    done[pick] = true;
    order.push_back(cs[pick]);
    for (std::size_t y = 0; y < n; ++y)
      if (y != pick && matrix_(cs[pick], cs[y]) == 0) --pending[y];
  }
  std::reverse(order.begin(), order.end());
  equal_value_order_ = std::move(order);
}

EnumSpec& EnumSpec::set_min_part(Colour c, int min) {
  if (min < 1) throw std::invalid_argument("EnumSpec: minimum part must be positive");
  min_part_[matrix_.index(c)] = min;
  return *this;
}

EnumSpec& EnumSpec::set_max_part(std::optional<int> k) {
  if (k && *k < 0) throw std::invalid_argument("EnumSpec: negative largest-part bound");
  max_part_ = k;
  return *this;
}

EnumSpec& EnumSpec::set_value_class(Colour c, ValueClass vc) {
  if (vc.modulus < 1) throw std::invalid_argument("EnumSpec: modulus must be positive");
  classes_[matrix_.index(c)] = vc;
  return *this;
}

bool EnumSpec::admits(int value, Colour c) const {
  const std::size_t i = matrix_.index(c);
  if (value < min_part_[i]) return false;
  if (max_part_ && value > *max_part_) return false;
  return classes_[i].admits(value);
}

std::string to_string(const Violation& v) {
  std::ostringstream out;
  out << v.condition << ':';
  for (std::size_t i = 0; i < v.parts.size(); ++i)
    out << (i ? "," : " ") << v.parts[i].value << colour_name(v.parts[i].colour);
  return out.str();
}

std::vector<Violation> extra_violations(const ColouredPartition& p, ExtraConditions extra) {
  std::vector<Violation> out;
  if (extra == ExtraConditions::none) return out;
  auto both = [&](const char* name, int m, Colour x, int m2, Colour y) {
    if (p.contains(m, x) && p.contains(m2, y)) out.push_back({name, {{m, x}, {m2, y}}});
  };
  for (int m = 1; m <= p.largest(); ++m) {
    if (extra == ExtraConditions::insertion_stage) {
      both("C1", m, Colour::a, m - 1, Colour::a);
      both("C2", m, Colour::c, m, Colour::a);
      both("C3", m, Colour::c, m - 1, Colour::d);
      both("C4", m, Colour::d, m - 1, Colour::d);
    } else {
      both("C'1", m, Colour::d, m, Colour::b);
      const int reps = p.multiplicity(m, Colour::c);
      if (reps > 1 && !p.contains(m, Colour::a) && !p.contains(m, Colour::d))
        out.push_back({"C'2", std::vector<ColouredPart>(static_cast<std::size_t>(reps), {m, Colour::c})});
      both("C'3", m, Colour::c, m - 1, Colour::d);
    }
  }
  return out;
}

std::vector<Violation> violations(const ColouredPartition& p, const EnumSpec& spec) {
  std::vector<Violation> out;
  for (const auto& part : p.parts()) {
    spec.matrix().index(part.colour);
    if (!spec.admits(part.value, part.colour)) out.push_back({"bounds", {part}});
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const auto& x = p[i];
    const auto& y = p[i + 1];
    if (x.value - y.value < spec.matrix()(x.colour, y.colour)) out.push_back({"gap", {x, y}});
  }
  auto extra = extra_violations(p, spec.extra());
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

bool is_member(const ColouredPartition& p, const EnumSpec& spec) { return violations(p, spec).empty(); }

namespace {

class Enumerator {
 public:
  Enumerator(const EnumSpec& spec, const std::function<void(const ColouredPartition&)>& visit)
      : spec_(spec), visit_(visit) {}

  void run(int max_weight) {
    if (max_weight < 0) return;
    emit();
    const int top = spec_.max_part() ? std::min(*spec_.max_part(), max_weight) : max_weight;
    for (int v = 1; v <= top; ++v)
      for (Colour c : spec_.colours())
        if (spec_.admits(v, c)) descend({v, c}, max_weight - v);
  }

 private:
  void emit() {
    ColouredPartition p(parts_);
    if (spec_.extra() == ExtraConditions::none || extra_violations(p, spec_.extra()).empty()) visit_(p);
  }

  void descend(ColouredPart part, int budget) {
    parts_.push_back(part);
    emit();
    for (int v = 1; v <= std::min(part.value, budget); ++v) {
      for (Colour c : spec_.colours()) {
        if (part.value - v < spec_.matrix()(part.colour, c) || !spec_.admits(v, c)) continue;
        descend({v, c}, budget - v);
      }
    }
    parts_.pop_back();
  }

  const EnumSpec& spec_;
  const std::function<void(const ColouredPartition&)>& visit_;
  std::vector<ColouredPart> parts_;
};

QSeries count_members(const EnumSpec& spec, std::size_t trunc) {
  std::vector<std::vector<CoeffPoly::Term>> acc(trunc);
  for_each_member(spec, static_cast<int>(trunc) - 1, [&](const ColouredPartition& p) {
    acc[static_cast<std::size_t>(p.weight())].emplace_back(p.colour_monomial(), 1);
  });
  std::vector<CoeffPoly> coeffs(trunc);
  for (std::size_t n = 0; n < trunc; ++n) coeffs[n] = CoeffPoly::from_terms(std::move(acc[n]));
  return QSeries(trunc, std::move(coeffs));
}

// first[v][x]: members whose first part is v_x. cumulative[x][v]: the same
// summed over first parts <= v_x.
QSeries transfer_series(const EnumSpec& spec, std::size_t trunc) {
  const auto& cs = spec.colours();
  const std::size_t n = cs.size();
  const int top = std::min<int>(spec.max_part().value_or(static_cast<int>(trunc)), static_cast<int>(trunc) - 1);
  const QSeries zero(trunc);
  std::vector<std::vector<QSeries>> cumulative(n, std::vector<QSeries>(static_cast<std::size_t>(std::max(top, 0)) + 1, zero));
  for (int v = 1; v <= top; ++v) {
    std::vector<QSeries> first(n, zero);
    for (Colour x : spec.equal_value_order()) {
      const std::size_t xi = spec.matrix().index(x);
      if (!spec.admits(v, x)) continue;
      QSeries rest = QSeries::one(trunc);
      bool self_loop = false;
      for (std::size_t yi = 0; yi < n; ++yi) {
        const int gap = spec.matrix()(x, cs[yi]);
        if (gap > 0) {
          if (v - gap >= 1) rest += cumulative[yi][static_cast<std::size_t>(v - gap)];
          continue;
        }
        rest += cumulative[yi][static_cast<std::size_t>(v - 1)];
        if (yi == xi) self_loop = true;
        else rest += first[yi];
      }
      const CoeffPoly var(Monomial::of(slot(x)));
      QSeries f = rest.times_term(var, v);
      if (self_loop) f = divide_unit(f, one_minus(var, v, trunc));
      first[xi] = std::move(f);
    }
    for (std::size_t xi = 0; xi < n; ++xi)
      cumulative[xi][static_cast<std::size_t>(v)] = cumulative[xi][static_cast<std::size_t>(v - 1)] + first[xi];
  }
  QSeries total = QSeries::one(trunc);
  for (std::size_t xi = 0; xi < n && top >= 1; ++xi) total += cumulative[xi][static_cast<std::size_t>(top)];
  return total;
}

}  // namespace

void for_each_member(const EnumSpec& spec, int max_weight, const std::function<void(const ColouredPartition&)>& visit) {
  Enumerator(spec, visit).run(max_weight);
}

std::vector<ColouredPartition> enumerate(const EnumSpec& spec, int max_weight) {
  std::vector<ColouredPartition> out;
  for_each_member(spec, max_weight, [&](const ColouredPartition& p) { out.push_back(p); });
  return out;
}

QSeries generating_series(const EnumSpec& spec, std::size_t trunc) {
  if (trunc == 0) return QSeries(0);
  if (spec.extra() != ExtraConditions::none) return count_members(spec, trunc);
  return transfer_series(spec, trunc);
}

EnumSpec dilate_spec(const EnumSpec& spec, const DilationRule& rule) {
  if (spec.max_part()) throw std::invalid_argument("dilate_spec: largest-part bound is not supported");
  if (spec.extra() != ExtraConditions::none) throw std::invalid_argument("dilate_spec: extra conditions are not supported");
  const auto& cs = spec.colours();
  std::optional<int> scale;
  for (Colour c : cs) {
    auto it = rule.find(c);
    if (it == rule.end()) throw std::invalid_argument("dilate_spec: no map for colour " + std::string(colour_name(c)));
    if (it->second.scale < 1) throw std::invalid_argument("dilate_spec: scale must be >= 1");
    if (scale && *scale != it->second.scale) throw std::invalid_argument("dilate_spec: maps must share one scale");
    scale = it->second.scale;
  }
  std::vector<std::vector<int>> rows;
  for (Colour x : cs) {
    std::vector<int> row;
    for (Colour y : cs) {
      const int e = *scale * spec.matrix()(x, y) + rule.at(x).offset - rule.at(y).offset;
      if (e < 0) throw std::invalid_argument("dilate_spec: dilated gap is negative");
      row.push_back(e);
    }
    rows.push_back(std::move(row));
  }
  EnumSpec out{GapMatrix(cs, rows)};
  for (Colour c : cs) {
    const AffineMap f = rule.at(c);
    const ValueClass vc = spec.value_class(c);
    // Admissible values of the source colour are min + j*step for j >= 0
    // once residues line up; the image keeps that shape with scaled step.
    int min = spec.min_part(c);
    while (!vc.admits(min)) ++min;
    const int image_min = f(min);
    if (image_min < 1) throw std::invalid_argument("dilate_spec: minimum part maps below 1");
    out.set_min_part(c, image_min);
    const int modulus = *scale * vc.modulus;
    out.set_value_class(c, {modulus, ((image_min % modulus) + modulus) % modulus});
  }
  return out;
}

GapMatrix capparelli_matrix() {
  return GapMatrix({Colour::a, Colour::c, Colour::d}, {{2, 2, 2}, {1, 1, 2}, {0, 1, 2}});
}

GapMatrix capparelli_tilde_matrix() {
  return GapMatrix({Colour::at, Colour::bt, Colour::ct}, {{2, 0, 2}, {2, 2, 3}, {1, 0, 1}});
}

GapMatrix primc_matrix() {
  return GapMatrix({Colour::a, Colour::b, Colour::c, Colour::d},
                   {{2, 1, 2, 2}, {1, 0, 1, 1}, {0, 1, 0, 2}, {0, 1, 0, 2}});
}

GapMatrix primc_dil2_matrix() {
  return GapMatrix({Colour::a, Colour::b, Colour::c, Colour::d},
                   {{4, 1, 3, 2}, {3, 0, 2, 1}, {1, 2, 0, 3}, {2, 3, 1, 4}});
}

GapMatrix insertion_stage_matrix() {
  return GapMatrix({Colour::a, Colour::b, Colour::c, Colour::d},
                   {{2, 1, 2, 2}, {0, 0, 1, 1}, {1, 0, 1, 2}, {0, 0, 1, 2}});
}

GapMatrix recolour_stage_matrix() {
  return GapMatrix({Colour::a, Colour::b, Colour::c, Colour::d},
                   {{2, 1, 2, 2}, {1, 0, 1, 1}, {0, 0, 0, 2}, {0, 1, 0, 2}});
}

EnumSpec capparelli_spec(std::optional<int> max_part) {
  EnumSpec s{capparelli_matrix()};
  s.set_max_part(max_part);
  return s;
}

EnumSpec capparelli_tilde_spec(std::optional<int> max_part) {
  EnumSpec s{capparelli_tilde_matrix()};
  s.set_min_part(Colour::at, 2).set_min_part(Colour::bt, 2).set_max_part(max_part);
  return s;
}

EnumSpec primc_spec(std::optional<int> max_part) {
  EnumSpec s{primc_matrix()};
  s.set_max_part(max_part);
  return s;
}

EnumSpec primc_dil2_spec() {
  EnumSpec s{primc_dil2_matrix()};
  s.set_min_part(Colour::a, 1).set_value_class(Colour::a, {2, 1});
  s.set_min_part(Colour::b, 2).set_value_class(Colour::b, {2, 0});
  s.set_min_part(Colour::c, 2).set_value_class(Colour::c, {2, 0});
  s.set_min_part(Colour::d, 3).set_value_class(Colour::d, {2, 1});
  return s;
}

EnumSpec insertion_stage_spec(std::optional<int> max_part) {
  EnumSpec s{insertion_stage_matrix()};
  s.set_max_part(max_part).set_extra(ExtraConditions::insertion_stage);
  return s;
}

EnumSpec recolour_stage_spec(std::optional<int> max_part) {
  EnumSpec s{recolour_stage_matrix()};
  s.set_max_part(max_part).set_extra(ExtraConditions::recolour_stage);
  return s;
}

}  // namespace wwlab
