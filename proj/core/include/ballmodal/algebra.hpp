#pragma once

// The eight-valued Boolean algebra with the ball operator, its three
// four-element subalgebras and the principal ultrafilters over it.
//
// An element is stored as a 3-bit atom set: bit 0 is e1, bit 1 is e2 and
// bit 2 is e3.  Every operation is a handful of bitwise instructions, which
// matters because the frame scans evaluate billions of them.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ballmodal {

class Element {
 public:
  constexpr Element() = default;

  static constexpr Element from_bits(std::uint8_t bits) {
    return Element(static_cast<std::uint8_t>(bits & 7u));
  }
  static constexpr Element bottom() { return Element(0); }
  static constexpr Element top() { return Element(7); }
  static constexpr Element e1() { return Element(1); }
  static constexpr Element e2() { return Element(2); }
  static constexpr Element e3() { return Element(4); }

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool is_top() const { return bits_ == 7; }
  constexpr bool is_bottom() const { return bits_ == 0; }
  constexpr bool is_atom() const {
    return bits_ == 1 || bits_ == 2 || bits_ == 4;
  }

  // Lattice order: x <= y iff the atoms of x are among the atoms of y.
  constexpr bool leq(Element other) const {
    return (bits_ & ~other.bits_ & 7u) == 0;
  }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  constexpr explicit Element(std::uint8_t bits) : bits_(bits) {}

  std::uint8_t bits_ = 0;
};

constexpr Element meet(Element x, Element y) {
  return Element::from_bits(x.bits() & y.bits());
}
constexpr Element join(Element x, Element y) {
  return Element::from_bits(x.bits() | y.bits());
}
constexpr Element complement(Element x) {
  return Element::from_bits(static_cast<std::uint8_t>(~x.bits()));
}

// 1 on the top and bottom values, 0 everywhere else.
constexpr Element ball(Element x) {
  return (x.is_top() || x.is_bottom()) ? Element::top() : Element::bottom();
}

// All eight values in ascending bit order.
constexpr std::array<Element, 8> all_elements() {
  std::array<Element, 8> out{};
  for (std::uint8_t i = 0; i < 8; ++i) out[i] = Element::from_bits(i);
  return out;
}

enum class Lattice : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Lattice, 3> kAllLattices = {Lattice::A, Lattice::B,
                                                        Lattice::C};

// The four-element carrier {0, e_i, -e_i, 1}, where A, B and C hold e1, e2
// and e3 respectively.  Listed as {0, atom, coatom, 1}; valuation
// enumeration follows this order.
constexpr std::array<Element, 4> carrier(Lattice lattice) {
  const Element atom =
      Element::from_bits(static_cast<std::uint8_t>(1u << static_cast<unsigned>(lattice)));
  const Element coatom = complement(atom);
  return {Element::bottom(), atom, coatom, Element::top()};
}

constexpr bool in_carrier(Element x, Lattice lattice) {
  for (Element y : carrier(lattice)) {
    if (y == x) return true;
  }
  return false;
}

// Join, inside the carrier, of every carrier element below x.  Falls back to
// the least carrier element when nothing lies below x.
constexpr Element down_interp_by_definition(Element x, Lattice lattice) {
  bool any = false;
  Element acc = Element::bottom();
  for (Element y : carrier(lattice)) {
    if (y.leq(x)) {
      acc = join(acc, y);
      any = true;
    }
  }
  return any ? acc : carrier(lattice).front();
}

// Meet, inside the carrier, of every carrier element above x.  Falls back to
// the greatest carrier element when nothing lies above x.
constexpr Element up_interp_by_definition(Element x, Lattice lattice) {
  bool any = false;
  Element acc = Element::top();
  for (Element y : carrier(lattice)) {
    if (x.leq(y)) {
      acc = meet(acc, y);
      any = true;
    }
  }
  return any ? acc : carrier(lattice).back();
}

namespace detail {

template <Element (*Fn)(Element, Lattice)>
constexpr std::array<std::array<Element, 8>, 3> tabulate() {
  std::array<std::array<Element, 8>, 3> table{};
  for (Lattice l : kAllLattices) {
    for (Element x : all_elements()) {
      table[static_cast<std::size_t>(l)][x.bits()] = Fn(x, l);
    }
  }
  return table;
}

inline constexpr auto kDownTable = tabulate<&down_interp_by_definition>();
inline constexpr auto kUpTable = tabulate<&up_interp_by_definition>();

}  // namespace detail

constexpr Element down_interp(Element x, Lattice lattice) {
  return detail::kDownTable[static_cast<std::size_t>(lattice)][x.bits()];
}

constexpr Element up_interp(Element x, Lattice lattice) {
  return detail::kUpTable[static_cast<std::size_t>(lattice)][x.bits()];
}

// A principal ultrafilter of the eight-element algebra, i.e. the up-set of
// one atom.  These are the only ultrafilters a finite Boolean algebra has.
class Ultrafilter {
 public:
  // The default ultrafilter is the up-set of e1.
  constexpr Ultrafilter() = default;

  static constexpr Ultrafilter generated_by(Element atom) {
    return Ultrafilter(atom);
  }

  constexpr Element generator() const { return generator_; }
  constexpr bool contains(Element x) const { return generator_.leq(x); }

  friend constexpr bool operator==(Ultrafilter, Ultrafilter) = default;
  friend constexpr auto operator<=>(Ultrafilter, Ultrafilter) = default;

 private:
  constexpr explicit Ultrafilter(Element atom) : generator_(atom) {}

  Element generator_ = Element::e1();
};

inline constexpr std::array<Ultrafilter, 3> kAllUltrafilters = {
    Ultrafilter::generated_by(Element::e1()),
    Ultrafilter::generated_by(Element::e2()),
    Ultrafilter::generated_by(Element::e3())};

constexpr bool is_designated(Element x, Ultrafilter uf) {
  return uf.contains(x);
}

// The non-top designated element of the given carrier.
constexpr Element z_of(Lattice lattice, Ultrafilter uf) {
  for (Element y : carrier(lattice)) {
    if (!y.is_top() && uf.contains(y)) return y;
  }
  return Element::top();  // unreachable for principal ultrafilters
}

// Names used by every file format and CLI: "0", "1", "e1" ... "e23".
std::string to_string(Element x);
std::optional<Element> element_from_name(std::string_view name);

std::string to_string(Lattice lattice);
std::optional<Lattice> lattice_from_name(std::string_view name);

// An ultrafilter is named by its generator ("e1", "e2" or "e3").
std::string to_string(Ultrafilter uf);
std::optional<Ultrafilter> ultrafilter_from_name(std::string_view name);

}  // namespace ballmodal
