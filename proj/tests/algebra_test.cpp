#include <gtest/gtest.h>

#include <bitset>
#include <set>

#include "ballmodal/algebra.hpp"

using namespace ballmodal;

namespace {

// Reference model: an element is a set of atom indices {1, 2, 3}.
using AtomSet = std::set<int>;

AtomSet atoms_of(Element x) {
  AtomSet out;
  for (int i = 0; i < 3; ++i) {
    if (x.bits() & (1u << i)) out.insert(i + 1);
  }
  return out;
}

bool subset(const AtomSet& a, const AtomSet& b) {
  for (int i : a) {
    if (!b.count(i)) return false;
  }
  return true;
}

AtomSet set_union(const AtomSet& a, const AtomSet& b) {
  AtomSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::vector<AtomSet> carrier_sets(int atom) {
  AtomSet all{1, 2, 3};
  AtomSet co = all;
  co.erase(atom);
  return {{}, {atom}, co, all};
}

AtomSet reference_down(const AtomSet& x, int atom) {
  AtomSet acc;
  for (const auto& y : carrier_sets(atom)) {
    if (subset(y, x)) acc = set_union(acc, y);
  }
  return acc;
}

int atom_of(Lattice l) { return static_cast<int>(l) + 1; }

}  // namespace

TEST(Algebra, EightDistinctValues) {
  std::set<std::uint8_t> seen;
  for (Element x : all_elements()) seen.insert(x.bits());
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_TRUE(atoms_of(Element::bottom()).empty());
  EXPECT_EQ(atoms_of(Element::top()), (AtomSet{1, 2, 3}));
}

TEST(Algebra, OperationsMatchAtomSets) {
  for (Element x : all_elements()) {
    for (Element y : all_elements()) {
      AtomSet inter;
      for (int i : atoms_of(x)) {
        if (atoms_of(y).count(i)) inter.insert(i);
      }
      EXPECT_EQ(atoms_of(meet(x, y)), inter);
      EXPECT_EQ(atoms_of(join(x, y)), set_union(atoms_of(x), atoms_of(y)));
      EXPECT_EQ(x.leq(y), subset(atoms_of(x), atoms_of(y)));
    }
    AtomSet comp;
    for (int i = 1; i <= 3; ++i) {
      if (!atoms_of(x).count(i)) comp.insert(i);
    }
    EXPECT_EQ(atoms_of(complement(x)), comp);
  }
}

TEST(Algebra, BooleanLaws) {
  for (Element x : all_elements()) {
    EXPECT_EQ(complement(complement(x)), x);
    EXPECT_EQ(meet(x, complement(x)), Element::bottom());
    EXPECT_EQ(join(x, complement(x)), Element::top());
    for (Element y : all_elements()) {
      EXPECT_EQ(complement(meet(x, y)), join(complement(x), complement(y)));
      EXPECT_EQ(complement(join(x, y)), meet(complement(x), complement(y)));
      EXPECT_EQ(join(x, meet(x, y)), x);
      EXPECT_EQ(meet(x, join(x, y)), x);
      for (Element z : all_elements()) {
        EXPECT_EQ(meet(x, join(y, z)), join(meet(x, y), meet(x, z)));
        EXPECT_EQ(join(x, meet(y, z)), meet(join(x, y), join(x, z)));
      }
    }
  }
}

TEST(Algebra, BallFacts) {
  for (Element x : all_elements()) {
    const Element b = ball(x);
    EXPECT_TRUE(b == Element::bottom() || b == Element::top());
    EXPECT_EQ(ball(b), Element::top());
    EXPECT_EQ(ball(complement(x)), b);
  }
  EXPECT_EQ(ball(Element::e1()), Element::bottom());
  EXPECT_EQ(ball(Element::top()), Element::top());
}

TEST(Algebra, CarriersAreClosed) {
  for (Lattice l : kAllLattices) {
    const auto c = carrier(l);
    for (Element x : c) {
      EXPECT_TRUE(in_carrier(complement(x), l));
      EXPECT_TRUE(in_carrier(ball(x), l));
      for (Element y : c) {
        EXPECT_TRUE(in_carrier(meet(x, y), l));
        EXPECT_TRUE(in_carrier(join(x, y), l));
      }
    }
  }
  EXPECT_EQ(carrier(Lattice::A)[1], Element::e1());
  EXPECT_EQ(carrier(Lattice::A)[2], *element_from_name("e23"));
  EXPECT_EQ(carrier(Lattice::B)[2], *element_from_name("e13"));
  EXPECT_EQ(carrier(Lattice::C)[2], *element_from_name("e12"));
}

TEST(Algebra, DownInterpMatchesReference) {
  for (Lattice l : kAllLattices) {
    for (Element x : all_elements()) {
      EXPECT_EQ(atoms_of(down_interp(x, l)), reference_down(atoms_of(x), atom_of(l)))
          << to_string(x) << " into " << to_string(l);
    }
  }
}

TEST(Algebra, DownInterpLaws) {
  for (Lattice l : kAllLattices) {
    for (Element x : all_elements()) {
      const Element d = down_interp(x, l);
      EXPECT_TRUE(d.leq(x));
      EXPECT_TRUE(in_carrier(d, l));
      EXPECT_EQ(down_interp(d, l), d);
      if (in_carrier(x, l)) EXPECT_EQ(d, x);
      for (Element y : all_elements()) {
        EXPECT_EQ(down_interp(meet(x, y), l), meet(d, down_interp(y, l)));
        if (x.leq(y)) EXPECT_TRUE(d.leq(down_interp(y, l)));
      }
    }
  }
}

TEST(Algebra, UpInterpIsOrderDual) {
  for (Lattice l : kAllLattices) {
    for (Element x : all_elements()) {
      const Element u = up_interp(x, l);
      EXPECT_TRUE(x.leq(u));
      EXPECT_TRUE(in_carrier(u, l));
      EXPECT_EQ(u, complement(down_interp(complement(x), l)));
    }
  }
}

TEST(Algebra, MiddlePairsSplitOnForeignLattices) {
  for (Element x : all_elements()) {
    if (x.is_top() || x.is_bottom()) continue;
    for (Lattice l : kAllLattices) {
      if (in_carrier(x, l)) continue;
      const Element a = down_interp(x, l);
      const Element b = down_interp(complement(x), l);
      const Element atom = carrier(l)[1];
      EXPECT_TRUE((a.is_bottom() && b == atom) || (b.is_bottom() && a == atom))
          << to_string(x) << " into " << to_string(l);
    }
  }
}

TEST(Algebra, Ultrafilters) {
  for (Ultrafilter uf : kAllUltrafilters) {
    int members = 0;
    for (Element x : all_elements()) {
      members += uf.contains(x);
      EXPECT_NE(uf.contains(x), uf.contains(complement(x)));
    }
    EXPECT_EQ(members, 4);
    for (Lattice l : kAllLattices) {
      std::set<Element> designated;
      for (Element x : carrier(l)) {
        if (is_designated(x, uf)) designated.insert(x);
      }
      EXPECT_EQ(designated, (std::set<Element>{Element::top(), z_of(l, uf)}));
    }
  }
}

TEST(Algebra, ZOfExamples) {
  const auto up = [](const char* g) { return *ultrafilter_from_name(g); };
  EXPECT_EQ(to_string(z_of(Lattice::A, up("e1"))), "e1");
  EXPECT_EQ(to_string(z_of(Lattice::B, up("e1"))), "e13");
  EXPECT_EQ(to_string(z_of(Lattice::C, up("e3"))), "e3");
}

TEST(Algebra, Names) {
  for (Element x : all_elements()) {
    EXPECT_EQ(element_from_name(to_string(x)), x);
  }
  EXPECT_EQ(to_string(Element::bottom()), "0");
  EXPECT_EQ(to_string(Element::top()), "1");
  EXPECT_EQ(to_string(Element::from_bits(6)), "e23");
  EXPECT_FALSE(element_from_name("e4").has_value());
  for (Lattice l : kAllLattices) EXPECT_EQ(lattice_from_name(to_string(l)), l);
  for (Ultrafilter uf : kAllUltrafilters) {
    EXPECT_EQ(ultrafilter_from_name(to_string(uf)), uf);
  }
  EXPECT_FALSE(ultrafilter_from_name("e12").has_value());
  EXPECT_EQ(Ultrafilter{}, *ultrafilter_from_name("e1"));
}
