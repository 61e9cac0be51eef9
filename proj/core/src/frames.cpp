#include "ballmodal/frames.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <tuple>

#include "ballmodal/error.hpp"
#include "parallel.hpp"

namespace ballmodal {

namespace {

constexpr std::array<FrameProperty, 9> kProperties = {
    FrameProperty::Reflexive,
    FrameProperty::Serial,
    FrameProperty::Symmetric,
    FrameProperty::Transitive,
    FrameProperty::Euclidean,
    FrameProperty::OutOfBubble,
    FrameProperty::SuperOutOfBubble,
    FrameProperty::TransitiveThroughEquality,
    FrameProperty::TransitiveThroughDifference,
};

constexpr std::array<const char*, 9> kPropertyNames = {
    "reflexive",       "serial",
    "symmetric",       "transitive",
    "euclidean",       "out_of_bubble",
    "super_out_of_bubble", "transitive_through_equality",
    "transitive_through_difference",
};

using Witness = std::optional<std::string>;

std::string edge_text(const Frame& f, std::size_t a, std::size_t b) {
  return f.name(a) + "->" + f.name(b);
}

Witness reflexive_violation(const Frame& f) {
  for (std::size_t w = 0; w < f.size(); ++w) {
    if (!f.accesses(w, w)) return f.name(w) + " does not access itself";
  }
  return std::nullopt;
}

Witness serial_violation(const Frame& f) {
  for (std::size_t w = 0; w < f.size(); ++w) {
    if (f.successors(w).empty()) return f.name(w) + " has no successor";
  }
  return std::nullopt;
}

Witness symmetric_violation(const Frame& f) {
  for (std::size_t w = 0; w < f.size(); ++w) {
    for (std::size_t u : f.successors(w)) {
      if (!f.accesses(u, w)) {
        return edge_text(f, w, u) + " without " + edge_text(f, u, w);
      }
    }
  }
  return std::nullopt;
}

// wRu and uRv without wRv, restricted to triples accepted by `applies`.
template <typename Pred>
Witness chain_violation(const Frame& f, Pred applies) {
  for (std::size_t w = 0; w < f.size(); ++w) {
    for (std::size_t u : f.successors(w)) {
      for (std::size_t v : f.successors(u)) {
        if (applies(w, u, v) && !f.accesses(w, v)) {
          return edge_text(f, w, u) + " and " + edge_text(f, u, v) +
                 " without " + edge_text(f, w, v);
        }
      }
    }
  }
  return std::nullopt;
}

Witness euclidean_violation(const Frame& f) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y : f.successors(x)) {
      for (std::size_t z : f.successors(x)) {
        if (!f.accesses(y, z)) {
          return edge_text(f, x, y) + " and " + edge_text(f, x, z) +
                 " without " + edge_text(f, y, z);
        }
      }
    }
  }
  return std::nullopt;
}

Witness out_of_bubble_violation(const Frame& f) {
  for (std::size_t w = 0; w < f.size(); ++w) {
    const auto succ = f.successors(w);
    if (succ.empty()) continue;
    const bool escapes = std::any_of(succ.begin(), succ.end(), [&](std::size_t u) {
      return f.lattice(u) != f.lattice(w);
    });
    if (!escapes) {
      return f.name(w) + " only accesses worlds of lattice " +
             to_string(f.lattice(w));
    }
  }
  return std::nullopt;
}

Witness super_out_of_bubble_violation(const Frame& f) {
  if (auto w = out_of_bubble_violation(f)) return w;
  for (std::size_t w = 0; w < f.size(); ++w) {
    for (std::size_t u : f.successors(w)) {
      if (f.lattice(u) == f.lattice(w)) continue;
      const auto succ = f.successors(w);
      const bool third = std::any_of(succ.begin(), succ.end(), [&](std::size_t v) {
        return f.lattice(v) != f.lattice(w) && f.lattice(v) != f.lattice(u);
      });
      if (!third) {
        return edge_text(f, w, u) + " but " + f.name(w) +
               " accesses no world of the third lattice";
      }
    }
  }
  return std::nullopt;
}

std::uint64_t pow3(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= 3;
  return r;
}

void require_size(std::size_t n) {
  if (n == 0) throw InputError("frames need at least one world");
  if (n > 7) {
    throw ResourceLimitExceeded("frames with more than 7 worlds cannot be indexed");
  }
}

std::uint64_t index_of(std::size_t n, const std::vector<std::uint8_t>& adjacency,
                       const std::vector<Lattice>& labels) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (adjacency[k]) mask |= std::uint64_t{1} << k;
  }
  std::uint64_t code = 0;
  for (Lattice l : labels) code = code * 3 + static_cast<std::uint64_t>(l);
  return mask * pow3(n) + code;
}

std::string countermodel_summary(const Model& m, const Formula& f) {
  std::string out;
  const auto vars = m.variables();
  for (std::size_t w = 0; w < m.frame().size(); ++w) {
    if (w) out += ' ';
    out += m.frame().name(w) + '{';
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (v) out += ',';
      out += vars[v] + '=' + to_string(*m.value(w, vars[v]));
    }
    out += '}';
  }
  if (auto failing = model_valid(m, f).failing_world) {
    out += " fails at " + m.frame().name(*failing);
  }
  return out;
}

}  // namespace

std::string to_string(FrameProperty property) {
  return kPropertyNames[static_cast<std::size_t>(property)];
}

std::optional<FrameProperty> property_from_name(std::string_view name) {
  if (name == "tte") return FrameProperty::TransitiveThroughEquality;
  if (name == "ttd") return FrameProperty::TransitiveThroughDifference;
  for (std::size_t i = 0; i < kPropertyNames.size(); ++i) {
    if (name == kPropertyNames[i]) return kProperties[i];
  }
  return std::nullopt;
}

std::span<const FrameProperty> all_properties() { return kProperties; }

std::optional<std::string> property_violation(FrameProperty property,
                                              const Frame& f) {
  switch (property) {
    case FrameProperty::Reflexive:
      return reflexive_violation(f);
    case FrameProperty::Serial:
      return serial_violation(f);
    case FrameProperty::Symmetric:
      return symmetric_violation(f);
    case FrameProperty::Transitive:
      return chain_violation(f, [](auto, auto, auto) { return true; });
    case FrameProperty::Euclidean:
      return euclidean_violation(f);
    case FrameProperty::OutOfBubble:
      return out_of_bubble_violation(f);
    case FrameProperty::SuperOutOfBubble:
      return super_out_of_bubble_violation(f);
    case FrameProperty::TransitiveThroughEquality:
      return chain_violation(f, [&](std::size_t w, std::size_t u, std::size_t v) {
        return f.lattice(w) == f.lattice(u) && f.lattice(u) == f.lattice(v);
      });
    case FrameProperty::TransitiveThroughDifference:
      return chain_violation(f, [&](std::size_t w, std::size_t u, std::size_t v) {
        return f.lattice(w) != f.lattice(u) && f.lattice(u) == f.lattice(v);
      });
  }
  return std::nullopt;
}

bool holds(FrameProperty property, const Frame& frame) {
  return !property_violation(property, frame).has_value();
}

bool is_reflexive(const Frame& f) { return holds(FrameProperty::Reflexive, f); }
bool is_serial(const Frame& f) { return holds(FrameProperty::Serial, f); }
bool is_symmetric(const Frame& f) { return holds(FrameProperty::Symmetric, f); }
bool is_transitive(const Frame& f) { return holds(FrameProperty::Transitive, f); }
bool is_euclidean(const Frame& f) { return holds(FrameProperty::Euclidean, f); }
bool is_out_of_bubble(const Frame& f) {
  return holds(FrameProperty::OutOfBubble, f);
}
bool is_super_out_of_bubble(const Frame& f) {
  return holds(FrameProperty::SuperOutOfBubble, f);
}
bool is_tte(const Frame& f) {
  return holds(FrameProperty::TransitiveThroughEquality, f);
}
bool is_ttd(const Frame& f) {
  return holds(FrameProperty::TransitiveThroughDifference, f);
}

std::uint64_t frame_count(std::size_t n) {
  require_size(n);
  return (std::uint64_t{1} << (n * n)) * pow3(n);
}

Frame frame_at(std::size_t n, std::uint64_t index) {
  if (index >= frame_count(n)) throw InputError("frame index out of range");
  const std::uint64_t labels_count = pow3(n);
  const std::uint64_t mask = index / labels_count;
  std::uint64_t code = index % labels_count;
  std::vector<Lattice> labels(n);
  for (std::size_t i = n; i-- > 0;) {
    labels[i] = static_cast<Lattice>(code % 3);
    code /= 3;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> (i * n + j) & 1) edges.emplace_back(i, j);
    }
  }
  return Frame::with_default_names(std::move(labels), edges);
}

std::uint64_t frame_index(const Frame& frame) {
  const std::size_t n = frame.size();
  require_size(n);
  std::vector<std::uint8_t> adjacency(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) adjacency[i * n + j] = frame.accesses(i, j);
  }
  return index_of(n, adjacency, frame.lattices());
}

std::string frame_encoding(const Frame& frame) {
  const std::size_t n = frame.size();
  const std::uint64_t mask = frame_index(frame) / pow3(n);
  std::string labels;
  for (Lattice l : frame.lattices()) labels += to_string(l);
  return std::to_string(n) + ":" + std::to_string(mask) + ":" + labels;
}

bool is_canonical_representative(const Frame& frame) {
  const std::size_t n = frame.size();
  const std::uint64_t own = frame_index(frame);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> adjacency(n * n);
  std::vector<Lattice> labels(n);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t i = 0; i < n; ++i) {
      labels[perm[i]] = frame.lattice(i);
      for (std::size_t j = 0; j < n; ++j) {
        adjacency[perm[i] * n + perm[j]] = frame.accesses(i, j);
      }
    }
    if (index_of(n, adjacency, labels) < own) return false;
  }
  return true;
}

void for_each_frame(std::size_t n, const EnumerationOptions& options,
                    const std::function<bool(const Frame&)>& visit) {
  const std::uint64_t count = frame_count(n);
  for (std::uint64_t i = 0; i < count; ++i) {
    const Frame f = frame_at(n, i);
    if (options.modulo_isomorphism && !is_canonical_representative(f)) continue;
    if (!visit(f)) return;
  }
}

std::vector<Frame> enumerate_frames(std::size_t n,
                                    const EnumerationOptions& options) {
  std::vector<Frame> out;
  for_each_frame(n, options, [&](const Frame& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::string to_string(MismatchDirection direction) {
  return direction == MismatchDirection::FormulaValidPropertyFails
             ? "formula_valid_property_fails"
             : "property_holds_formula_invalid";
}

std::size_t CorrespondenceReport::count(MismatchDirection direction) const {
  return static_cast<std::size_t>(
      std::count_if(mismatches.begin(), mismatches.end(),
                    [&](const Mismatch& m) { return m.direction == direction; }));
}

CorrespondenceReport correspondence_check(FrameProperty property,
                                          const Formula& f,
                                          std::size_t max_worlds,
                                          std::span<const Ultrafilter> ufs,
                                          const SearchLimits& limits,
                                          const EnumerationOptions& options) {
  if (max_worlds < 1) throw InputError("max_worlds must be at least 1");
  CorrespondenceReport report{property, f, max_worlds,
                              {ufs.begin(), ufs.end()}, {}, 0, {}};
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    total += frame_count(n);
    if (total > limits.max_frames) {
      throw ResourceLimitExceeded("frame count exceeds the cap of " +
                                  std::to_string(limits.max_frames));
    }
  }

  using Keyed = std::tuple<std::size_t, std::uint64_t, std::size_t, Mismatch>;
  std::vector<Keyed> found;
  std::mutex found_mutex;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    std::atomic<std::uint64_t> visited{0};
    detail::parallel_for(frame_count(n), limits.workers, [&](std::uint64_t index) {
      limits.check_deadline();
      const Frame frame = frame_at(n, index);
      if (options.modulo_isomorphism && !is_canonical_representative(frame)) return;
      ++visited;
      const auto violation = property_violation(property, frame);
      const auto validity = frame_validity(frame, f, ufs, limits);
      std::vector<Keyed> local;
      for (std::size_t k = 0; k < ufs.size(); ++k) {
        const auto& v = validity[k];
        if (v.valid && violation) {
          local.emplace_back(n, index, k,
                             Mismatch{frame, ufs[k],
                                      MismatchDirection::FormulaValidPropertyFails,
                                      *violation, std::nullopt});
        } else if (!v.valid && !violation) {
          local.emplace_back(n, index, k,
                             Mismatch{frame, ufs[k],
                                      MismatchDirection::PropertyHoldsFormulaInvalid,
                                      countermodel_summary(*v.countermodel, f),
                                      v.countermodel});
        }
      }
      if (!local.empty()) {
        std::lock_guard lock(found_mutex);
        std::move(local.begin(), local.end(), std::back_inserter(found));
      }
    });
    report.frames_per_size.push_back(visited.load());
    report.frames_checked += visited.load();
  }
  std::sort(found.begin(), found.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
           std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
  });
  for (auto& k : found) report.mismatches.push_back(std::move(std::get<3>(k)));
  return report;
}

Frame euc3(Lattice w, Lattice u, Lattice v) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) edges.emplace_back(i, j);
  }
  return Frame({"w", "u", "v"}, {w, u, v}, edges);
}

namespace {

Frame soob_shape(std::vector<Lattice> labels) {
  // w, w1, w2, w1p, w1pp, w2p, w2pp
  std::vector<Edge> edges = {{0, 1}, {0, 2}};
  for (const auto& clique : {std::array<std::size_t, 3>{1, 3, 4},
                             std::array<std::size_t, 3>{2, 5, 6}}) {
    for (std::size_t a : clique) {
      for (std::size_t b : clique) {
        if (a != b) edges.emplace_back(a, b);
      }
    }
  }
  return Frame({"w", "w1", "w2", "w1p", "w1pp", "w2p", "w2pp"},
               std::move(labels), edges);
}

}  // namespace

Frame soob_f() {
  using L = Lattice;
  return soob_shape({L::A, L::B, L::C, L::A, L::C, L::A, L::B});
}

Frame soob_fprime() {
  using L = Lattice;
  return soob_shape({L::A, L::C, L::C, L::A, L::B, L::A, L::B});
}

std::vector<std::string> fixture_names() {
  return {"euc3", "soob_F", "soob_Fprime"};
}

std::optional<Frame> fixture(std::string_view name) {
  if (name == "euc3") return euc3();
  if (name == "soob_F") return soob_f();
  if (name == "soob_Fprime") return soob_fprime();
  return std::nullopt;
}

IndiscernibilityReport indiscernibility_check(
    const Frame& first, const Frame& second, const std::vector<Formula>& corpus,
    std::span<const Ultrafilter> ufs, const SearchLimits& limits) {
  IndiscernibilityReport report{corpus.size(), {ufs.begin(), ufs.end()}, {}};
  std::vector<std::vector<Disagreement>> per_formula(corpus.size());
  detail::parallel_for(corpus.size(), limits.workers, [&](std::uint64_t i) {
    limits.check_deadline();
    const auto a = frame_validity(first, corpus[i], ufs, limits);
    const auto b = frame_validity(second, corpus[i], ufs, limits);
    for (std::size_t k = 0; k < ufs.size(); ++k) {
      if (a[k].valid != b[k].valid) {
        per_formula[i].push_back({corpus[i], ufs[k], a[k].valid, b[k].valid});
      }
    }
  });
  for (auto& d : per_formula) {
    std::move(d.begin(), d.end(), std::back_inserter(report.disagreements));
  }
  return report;
}

}  // namespace ballmodal
