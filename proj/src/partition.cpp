#include "wwlab/partition.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace wwlab {

namespace {
constexpr std::array<std::string_view, kColourCount> kNames{"a", "b", "c", "d", "at", "bt", "ct"};
}

std::string_view colour_name(Colour c) { return kNames[static_cast<std::size_t>(c)]; }

int ColouredPartition::weight() const {
  int w = 0;
  for (const auto& p : parts_) w += p.value;
  return w;
}

int ColouredPartition::largest() const {
  int m = 0;
  for (const auto& p : parts_) m = std::max(m, p.value);
  return m;
}

int ColouredPartition::count(Colour c) const {
  int n = 0;
  for (const auto& p : parts_) n += p.colour == c;
  return n;
}

int ColouredPartition::multiplicity(int value, Colour c) const {
  int n = 0;
  for (const auto& p : parts_) n += (p.value == value && p.colour == c);
  return n;
}

Monomial ColouredPartition::colour_monomial() const {
  Monomial m;
  for (const auto& p : parts_) m = m * Monomial::of(slot(p.colour));
  return m;
}

std::string to_string(const ColouredPartition& p) {
  std::string out;
  for (const auto& part : p.parts()) {
    if (!out.empty()) out += '+';
    out += std::to_string(part.value);
    out += colour_name(part.colour);
  }
  return out;
}

ColouredPartition parse_partition(std::string_view text) {
  std::vector<ColouredPart> parts;
  if (text.empty()) return {};
  std::size_t pos = 0;
  for (;;) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("partition: expected part value at offset " + std::to_string(pos));
    const int value = std::stoi(std::string(text.substr(start, pos - start)));
    if (value < 1) throw std::invalid_argument("partition: part values must be positive");
    const std::size_t cstart = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view name = text.substr(cstart, pos - cstart);
    bool found = false;
    for (std::size_t i = 0; i < kColourCount; ++i) {
      if (kNames[i] == name) {
        parts.push_back({value, static_cast<Colour>(i)});
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("partition: unknown colour '" + std::string(name) + "'");
    if (pos == text.size()) break;
    if (text[pos] != '+') throw std::invalid_argument("partition: expected '+' at offset " + std::to_string(pos));
    ++pos;
  }
  return ColouredPartition(std::move(parts));
}

DilationRule primc_dilation() {
  return {{Colour::a, {2, -1}}, {Colour::b, {2, 0}}, {Colour::c, {2, 0}}, {Colour::d, {2, 1}}};
}

DilationRule capparelli_dilation() { return {{Colour::a, {3, -1}}, {Colour::c, {3, 0}}, {Colour::d, {3, 1}}}; }

DilationRule capparelli_tilde_dilation() {
  return {{Colour::at, {3, -2}}, {Colour::bt, {3, -4}}, {Colour::ct, {3, 0}}};
}

ColouredPartition dilate_partition(const ColouredPartition& p, const DilationRule& rule) {
  std::vector<ColouredPart> out;
  out.reserve(p.size());
  for (const auto& part : p.parts()) {
    auto it = rule.find(part.colour);
    if (it == rule.end())
      throw std::invalid_argument("dilate: no map for colour " + std::string(colour_name(part.colour)));
    if (it->second.scale < 1) throw std::invalid_argument("dilate: scale must be >= 1");
    const int v = it->second(part.value);
    if (v < 1) throw std::invalid_argument("dilate: part " + std::to_string(part.value) +
                                           std::string(colour_name(part.colour)) + " maps below 1");
    out.push_back({v, part.colour});
  }
  return ColouredPartition(std::move(out));
}

ColouredPartition relabel_tilde_to_capparelli(const ColouredPartition& p) {
  std::vector<ColouredPart> out;
  for (const auto& part : p.parts()) {
    switch (part.colour) {
      case Colour::at: out.push_back({part.value - 1, Colour::d}); break;
      case Colour::bt: out.push_back({part.value - 1, Colour::a}); break;
      case Colour::ct: out.push_back({part.value, Colour::c}); break;
      default: throw std::invalid_argument("relabel: expected tilde colours only");
    }
    if (out.back().value < 1) throw std::invalid_argument("relabel: part maps below 1");
  }
  return ColouredPartition(std::move(out));
}

ColouredPartition relabel_capparelli_to_tilde(const ColouredPartition& p) {
  std::vector<ColouredPart> out;
  for (const auto& part : p.parts()) {
    switch (part.colour) {
      case Colour::d: out.push_back({part.value + 1, Colour::at}); break;
      case Colour::a: out.push_back({part.value + 1, Colour::bt}); break;
      case Colour::c: out.push_back({part.value, Colour::ct}); break;
      default: throw std::invalid_argument("relabel: expected colours a, c, d only");
    }
  }
  return ColouredPartition(std::move(out));
}

}  // namespace wwlab
