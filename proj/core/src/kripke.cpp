#include "ballmodal/kripke.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ballmodal/error.hpp"
#include "ballmodal/frames.hpp"
#include "parallel.hpp"

namespace ballmodal {

Frame::Frame(std::vector<std::string> names, std::vector<Lattice> lattices,
             const std::vector<Edge>& edges)
    : names_(std::move(names)), lattices_(std::move(lattices)) {
  if (names_.empty()) throw InputError("a frame needs at least one world");
  if (lattices_.size() != names_.size()) {
    throw InputError("every world needs exactly one lattice label");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw InputError("duplicate world name '" + n + "'");
  }
  const std::size_t n = names_.size();
  adjacency_.assign(n * n, 0);
  for (const auto& [from, to] : edges) {
    if (from >= n || to >= n) throw InputError("edge refers to a missing world");
    adjacency_[from * n + to] = 1;
  }
  successors_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adjacency_[i * n + j]) successors_[i].push_back(j);
    }
  }
}

Frame Frame::with_default_names(std::vector<Lattice> lattices,
                                const std::vector<Edge>& edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    names.push_back("w" + std::to_string(i + 1));
  }
  return Frame(std::move(names), std::move(lattices), edges);
}

std::optional<std::size_t> Frame::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<Edge> Frame::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : successors_[i]) out.emplace_back(i, j);
  }
  return out;
}

bool operator==(const Frame& a, const Frame& b) {
  return a.names_ == b.names_ && a.lattices_ == b.lattices_ &&
         a.adjacency_ == b.adjacency_;
}

Model::Model(Frame frame, Ultrafilter uf) : frame_(std::move(frame)), uf_(uf) {}

void Model::assign(std::size_t world, const std::string& variable,
                   Element value) {
  if (world >= frame_.size()) throw InputError("no such world");
  const Lattice l = frame_.lattice(world);
  if (!in_carrier(value, l)) {
    throw InputError("value " + to_string(value) + " of " + variable + " at " +
                     frame_.name(world) + " is not in lattice " + to_string(l));
  }
  auto& slot = values_[variable];
  slot.resize(frame_.size());
  slot[world] = value;
}

std::optional<Element> Model::value(std::size_t world,
                                    const std::string& variable) const {
  auto it = values_.find(variable);
  if (it == values_.end() || world >= it->second.size()) return std::nullopt;
  return it->second[world];
}

std::vector<std::string> Model::variables() const {
  std::vector<std::string> out;
  for (const auto& [name, vals] : values_) {
    if (std::any_of(vals.begin(), vals.end(),
                    [](const auto& v) { return v.has_value(); })) {
      out.push_back(name);
    }
  }
  return out;
}

bool operator==(const Model& a, const Model& b) {
  return a.frame_ == b.frame_ && a.uf_ == b.uf_ &&
         a.variables() == b.variables() &&
         std::all_of(a.values_.begin(), a.values_.end(), [&](const auto& kv) {
           for (std::size_t w = 0; w < a.frame_.size(); ++w) {
             if (a.value(w, kv.first) != b.value(w, kv.first)) return false;
           }
           return true;
         });
}

CompiledFormula::CompiledFormula(const Formula& f,
                                 std::vector<std::string> variable_order)
    : variables_(std::move(variable_order)) {
  emit(f);
}

std::uint32_t CompiledFormula::emit(const Formula& f) {
  Instr ins{f.op()};
  if (f.op() == Op::Var) {
    auto it = std::find(variables_.begin(), variables_.end(), f.name());
    if (it == variables_.end()) {
      throw InputError("variable '" + f.name() + "' has no valuation");
    }
    ins.var = static_cast<std::uint32_t>(it - variables_.begin());
  } else if (is_unary(f.op())) {
    ins.a = emit(f.lhs());
  } else if (is_binary(f.op())) {
    ins.a = emit(f.lhs());
    ins.b = emit(f.rhs());
  }
  program_.push_back(ins);
  return static_cast<std::uint32_t>(program_.size() - 1);
}

std::span<const Element> CompiledFormula::evaluate(
    const Frame& frame, std::span<const Element> valuation,
    std::vector<Element>& scratch) const {
  const std::size_t n = frame.size();
  const std::size_t nv = variables_.size();
  scratch.resize(program_.size() * n);
  for (std::size_t i = 0; i < program_.size(); ++i) {
    const Instr& ins = program_[i];
    Element* out = scratch.data() + i * n;
    const Element* a = scratch.data() + ins.a * n;
    const Element* b = scratch.data() + ins.b * n;
    for (std::size_t w = 0; w < n; ++w) {
      const Lattice lw = frame.lattice(w);
      switch (ins.op) {
        case Op::Var:
          out[w] = valuation[w * nv + ins.var];
          break;
        case Op::Top:
          out[w] = Element::top();
          break;
        case Op::Bot:
          out[w] = Element::bottom();
          break;
        case Op::Not:
          out[w] = down_interp(complement(a[w]), lw);
          break;
        case Op::And:
          out[w] = down_interp(meet(a[w], b[w]), lw);
          break;
        case Op::Or:
          out[w] = down_interp(join(a[w], b[w]), lw);
          break;
        case Op::Ball:
          out[w] = down_interp(ball(a[w]), lw);
          break;
        case Op::Box: {
          Element acc = Element::top();
          for (std::size_t u : frame.successors(w)) {
            acc = meet(acc, down_interp(a[u], lw));
          }
          out[w] = acc;
          break;
        }
        case Op::Diamond: {
          // v_w(<>x) = down(-v_w([]~x)), with v_u(~x) = down(-v_u(x), L_u).
          Element box_not = Element::top();
          for (std::size_t u : frame.successors(w)) {
            const Element not_u = down_interp(complement(a[u]), frame.lattice(u));
            box_not = meet(box_not, down_interp(not_u, lw));
          }
          out[w] = down_interp(complement(box_not), lw);
          break;
        }
        case Op::BoxSame: {
          Element acc = Element::top();
          for (std::size_t u : frame.successors(w)) {
            if (frame.lattice(u) == lw) acc = meet(acc, a[u]);
          }
          out[w] = acc;
          break;
        }
        case Op::BoxDiff: {
          Element acc = Element::top();
          for (std::size_t u : frame.successors(w)) {
            if (frame.lattice(u) != lw) acc = meet(acc, down_interp(a[u], lw));
          }
          out[w] = acc;
          break;
        }
      }
    }
  }
  return {scratch.data() + (program_.size() - 1) * n, n};
}

namespace {

std::vector<std::string> sorted_variables(const Formula& f) {
  const auto vars = f.variables();
  return {vars.begin(), vars.end()};
}

std::vector<Element> flat_valuation(const Model& m,
                                    const std::vector<std::string>& vars) {
  const std::size_t n = m.frame().size();
  std::vector<Element> out(n * vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      auto value = m.value(w, vars[v]);
      if (!value) {
        if (m.unknown_variables() == UnknownVariables::Reject) {
          throw InputError("variable '" + vars[v] + "' has no value at world " +
                           m.frame().name(w));
        }
        value = Element::bottom();
      }
      out[w * vars.size() + v] = *value;
    }
  }
  return out;
}

std::size_t world_index(const Model& m, std::string_view world) {
  auto idx = m.frame().index_of(world);
  if (!idx) throw InputError("unknown world '" + std::string(world) + "'");
  return *idx;
}

bool all_designated(std::span<const Element> values, Ultrafilter uf) {
  return std::all_of(values.begin(), values.end(),
                     [uf](Element x) { return is_designated(x, uf); });
}

// 4^(worlds * vars), or a ResourceLimitExceeded when above the cap.
std::uint64_t valuation_count(std::size_t worlds, std::size_t vars,
                              const SearchLimits& limits) {
  const std::size_t positions = worlds * vars;
  if (positions >= 32 ||
      (std::uint64_t{1} << (2 * positions)) > limits.max_valuations) {
    throw ResourceLimitExceeded(
        "valuation space 4^" + std::to_string(positions) +
        " exceeds the cap of " + std::to_string(limits.max_valuations));
  }
  return std::uint64_t{1} << (2 * positions);
}

// Walks every valuation of a frame in lexicographic order over carrier
// positions (world-major, last position fastest).
class ValuationOdometer {
 public:
  ValuationOdometer(const Frame& frame, std::size_t vars)
      : frame_(frame), vars_(vars), digits_(frame.size() * vars, 0),
        values_(frame.size() * vars, Element::bottom()) {}

  std::span<const Element> values() const { return values_; }

  bool advance() {
    for (std::size_t p = digits_.size(); p-- > 0;) {
      const auto c = carrier(frame_.lattice(p / vars_));
      if (++digits_[p] < 4) {
        values_[p] = c[digits_[p]];
        return true;
      }
      digits_[p] = 0;
      values_[p] = c[0];
    }
    return false;
  }

 private:
  const Frame& frame_;
  std::size_t vars_;
  std::vector<std::uint8_t> digits_;
  std::vector<Element> values_;
};

Model build_model(const Frame& frame, Ultrafilter uf,
                  const std::vector<std::string>& vars,
                  std::span<const Element> valuation) {
  Model m(frame, uf);
  for (std::size_t w = 0; w < frame.size(); ++w) {
    for (std::size_t v = 0; v < vars.size(); ++v) {
      m.assign(w, vars[v], valuation[w * vars.size() + v]);
    }
  }
  return m;
}

constexpr std::uint64_t kDeadlineStride = 4096;

}  // namespace

std::vector<Element> evaluate_all(const Model& m, const Formula& f) {
  const auto vars = sorted_variables(f);
  const auto valuation = flat_valuation(m, vars);
  CompiledFormula compiled(f, vars);
  std::vector<Element> scratch;
  const auto values = compiled.evaluate(m.frame(), valuation, scratch);
  return {values.begin(), values.end()};
}

Element eval(const Model& m, std::size_t world, const Formula& f) {
  if (world >= m.frame().size()) throw InputError("no such world");
  return evaluate_all(m, f)[world];
}

Element eval(const Model& m, std::string_view world, const Formula& f) {
  return eval(m, world_index(m, world), f);
}

bool satisfies(const Model& m, std::size_t world, const Formula& f) {
  return is_designated(eval(m, world, f), m.ultrafilter());
}

bool satisfies(const Model& m, std::string_view world, const Formula& f) {
  return satisfies(m, world_index(m, world), f);
}

ModelValidity model_valid(const Model& m, const Formula& f) {
  const auto values = evaluate_all(m, f);
  for (std::size_t w = 0; w < values.size(); ++w) {
    if (!is_designated(values[w], m.ultrafilter())) return {false, w};
  }
  return {};
}

void SearchLimits::check_deadline() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw ResourceLimitExceeded("time budget exhausted");
  }
}

FrameValidity frame_valid(const Frame& frame, const Formula& f, Ultrafilter uf,
                          const SearchLimits& limits) {
  const Ultrafilter ufs[] = {uf};
  return frame_validity(frame, f, ufs, limits).front();
}

std::vector<FrameValidity> frame_validity(const Frame& frame, const Formula& f,
                                          std::span<const Ultrafilter> ufs,
                                          const SearchLimits& limits) {
  const auto vars = sorted_variables(f);
  valuation_count(frame.size(), vars.size(), limits);
  CompiledFormula compiled(f, vars);
  std::vector<FrameValidity> result(ufs.size());
  std::size_t open = ufs.size();
  std::vector<Element> scratch;
  ValuationOdometer odo(frame, vars.size());
  std::uint64_t step = 0;
  do {
    if (++step % kDeadlineStride == 0) limits.check_deadline();
    const auto values = compiled.evaluate(frame, odo.values(), scratch);
    for (std::size_t k = 0; k < ufs.size(); ++k) {
      if (!result[k].valid || all_designated(values, ufs[k])) continue;
      result[k].valid = false;
      result[k].countermodel = build_model(frame, ufs[k], vars, odo.values());
      --open;
    }
  } while (open > 0 && odo.advance());
  return result;
}

std::optional<Model> countermodel_search(const std::vector<Formula>& premises,
                                         const Formula& goal,
                                         std::size_t max_worlds,
                                         std::span<const Ultrafilter> ufs,
                                         const SearchLimits& limits,
                                         const FrameFilter& frame_filter) {
  if (max_worlds < 1) throw InputError("max_worlds must be at least 1");
  if (ufs.empty()) return std::nullopt;
  std::set<std::string> var_set = goal.variables();
  for (const auto& p : premises) {
    const auto pv = p.variables();
    var_set.insert(pv.begin(), pv.end());
  }
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  const CompiledFormula goal_c(goal, vars);
  std::vector<CompiledFormula> premise_c;
  for (const auto& p : premises) premise_c.emplace_back(p, vars);

  std::uint64_t total_frames = 0;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    valuation_count(n, vars.size(), limits);
    total_frames += frame_count(n);
    if (total_frames > limits.max_frames) {
      throw ResourceLimitExceeded("frame count exceeds the cap of " +
                                  std::to_string(limits.max_frames));
    }
  }

  // First refuting (ultrafilter position, valuation) on one frame.
  auto search_frame = [&](const Frame& frame)
      -> std::optional<std::pair<std::size_t, std::vector<Element>>> {
    std::vector<Element> scratch;
    std::vector<Element> goal_values;
    std::size_t best = ufs.size();
    std::vector<Element> best_valuation;
    ValuationOdometer odo(frame, vars.size());
    std::uint64_t step = 0;
    do {
      if (++step % kDeadlineStride == 0) limits.check_deadline();
      const auto gv = goal_c.evaluate(frame, odo.values(), scratch);
      goal_values.assign(gv.begin(), gv.end());
      for (std::size_t k = 0; k < best; ++k) {
        if (all_designated(goal_values, ufs[k])) continue;
        bool premises_hold = true;
        for (const auto& pc : premise_c) {
          if (!all_designated(pc.evaluate(frame, odo.values(), scratch), ufs[k])) {
            premises_hold = false;
            break;
          }
        }
        if (premises_hold) {
          best = k;
          best_valuation.assign(odo.values().begin(), odo.values().end());
          break;
        }
      }
    } while (best > 0 && odo.advance());
    if (best == ufs.size()) return std::nullopt;
    return std::pair{best, std::move(best_valuation)};
  };

  for (std::size_t n = 1; n <= max_worlds; ++n) {
    const auto hit = detail::parallel_find_first(
        frame_count(n), limits.workers,
        [&](std::uint64_t index) {
          const Frame frame = frame_at(n, index);
          if (frame_filter && !frame_filter(frame)) return false;
          return search_frame(frame).has_value();
        });
    if (!hit) continue;
    const Frame frame = frame_at(n, *hit);
    const auto found = search_frame(frame);
    return build_model(frame, ufs[found->first], vars, found->second);
  }
  return std::nullopt;
}

bool classical_reference_eval(const Frame& frame,
                              const ClassicalValuation& valuation,
                              std::size_t world, const Formula& f) {
  switch (f.op()) {
    case Op::Var: {
      auto it = valuation.find(f.name());
      if (it == valuation.end() || world >= it->second.size()) {
        throw InputError("variable '" + f.name() + "' has no truth value");
      }
      return it->second[world];
    }
    case Op::Top:
      return true;
    case Op::Bot:
      return false;
    case Op::Not:
      return !classical_reference_eval(frame, valuation, world, f.lhs());
    case Op::And:
      return classical_reference_eval(frame, valuation, world, f.lhs()) &&
             classical_reference_eval(frame, valuation, world, f.rhs());
    case Op::Or:
      return classical_reference_eval(frame, valuation, world, f.lhs()) ||
             classical_reference_eval(frame, valuation, world, f.rhs());
    case Op::Box:
      for (std::size_t u = 0; u < frame.size(); ++u) {
        if (frame.accesses(world, u) &&
            !classical_reference_eval(frame, valuation, u, f.lhs())) {
          return false;
        }
      }
      return true;
    case Op::Diamond:
      for (std::size_t u = 0; u < frame.size(); ++u) {
        if (frame.accesses(world, u) &&
            classical_reference_eval(frame, valuation, u, f.lhs())) {
          return true;
        }
      }
      return false;
    case Op::Ball:
    case Op::BoxSame:
    case Op::BoxDiff:
      break;
  }
  throw InputError("formula " + print(f) +
                   " is outside the classical modal fragment");
}

std::optional<ClassicalCountermodel> classical_countermodel_search(
    const std::vector<Formula>& premises, const Formula& goal,
    std::size_t max_worlds) {
  std::set<std::string> vars = goal.variables();
  for (const auto& p : premises) {
    const auto pv = p.variables();
    vars.insert(pv.begin(), pv.end());
  }
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    const std::size_t bits = n * vars.size();
    if (n * n >= 64 || bits >= 64) {
      throw ResourceLimitExceeded("classical search space too large");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (mask >> (i * n + j) & 1) edges.emplace_back(i, j);
        }
      }
      Frame frame = Frame::with_default_names(
          std::vector<Lattice>(n, Lattice::A), edges);
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        ClassicalValuation val;
        std::size_t bit = 0;
        for (const auto& v : vars) {
          auto& row = val[v];
          for (std::size_t w = 0; w < n; ++w) row.push_back(code >> bit++ & 1);
        }
        auto holds_everywhere = [&](const Formula& f) {
          for (std::size_t w = 0; w < n; ++w) {
            if (!classical_reference_eval(frame, val, w, f)) return false;
          }
          return true;
        };
        if (std::all_of(premises.begin(), premises.end(), holds_everywhere) &&
            !holds_everywhere(goal)) {
          return ClassicalCountermodel{frame, val};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ballmodal
