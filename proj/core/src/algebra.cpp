#include "ballmodal/algebra.hpp"

namespace ballmodal {

namespace {

constexpr std::array<std::string_view, 8> kElementNames = {
    "0", "e1", "e2", "e12", "e3", "e13", "e23", "1"};

}  // namespace

std::string to_string(Element x) { return std::string(kElementNames[x.bits()]); }

std::optional<Element> element_from_name(std::string_view name) {
  for (std::uint8_t i = 0; i < kElementNames.size(); ++i) {
    if (kElementNames[i] == name) return Element::from_bits(i);
  }
  return std::nullopt;
}

std::string to_string(Lattice lattice) {
  switch (lattice) {
    case Lattice::A:
      return "A";
    case Lattice::B:
      return "B";
    case Lattice::C:
      return "C";
  }
  return "?";
}

std::optional<Lattice> lattice_from_name(std::string_view name) {
  if (name == "A") return Lattice::A;
  if (name == "B") return Lattice::B;
  if (name == "C") return Lattice::C;
  return std::nullopt;
}

std::string to_string(Ultrafilter uf) { return to_string(uf.generator()); }

std::optional<Ultrafilter> ultrafilter_from_name(std::string_view name) {
  auto x = element_from_name(name);
  if (!x || !x->is_atom()) return std::nullopt;
  return Ultrafilter::generated_by(*x);
}

}  // namespace ballmodal
