#pragma once
// Trace-set model: the symbol alphabet (named identifiers plus uniquely
// numbered stars), validated traces, and per-trace hop distances.

#include "tracetopo/rational.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracetopo {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// One alphabet symbol: a named router identifier or an anonymous star *i.
class Symbol {
public:
    static Symbol named(std::string name) { return Symbol(std::move(name), 0); }
    static Symbol star(int id) { return Symbol(std::string(), id); }

    bool is_star() const { return star_id_ > 0; }
    const std::string& name() const { return name_; }
    int star_id() const { return star_id_; }

    // Display form: the identifier itself, or "*<id>".
    std::string label() const { return is_star() ? "*" + std::to_string(star_id_) : name_; }

    friend auto operator<=>(const Symbol& a, const Symbol& b) {
        if (auto c = a.star_id_ <=> b.star_id_; c != 0) return c;
        return a.name_ <=> b.name_;
    }
    friend bool operator==(const Symbol&, const Symbol&) = default;

private:
    Symbol(std::string name, int id) : name_(std::move(name)), star_id_(id) {}
    std::string name_;
    int star_id_; // 0 for named symbols
};

// A probe path: named endpoints, no repeated symbol.
struct Trace {
    std::vector<Symbol> symbols;

    bool contains(const Symbol& s) const;
    int index_of(const Symbol& s) const; // -1 if absent
};

// Hop count between two symbols of one trace (absolute index difference).
int trace_distance(const Trace& t, const Symbol& a, const Symbol& b);

struct TraceSetStats {
    int n = 0;  // distinct named identifiers
    int s = 0;  // stars
    int N = 0;  // n + s
    int nu = 0; // distinct named-named adjacent pairs
};

class TraceSet {
public:
    TraceSet() = default;
    // Validates trace-level and set-level invariants; throws std::invalid_argument.
    explicit TraceSet(std::vector<Trace> traces);

    const std::vector<Trace>& traces() const { return traces_; }
    const TraceSetStats& stats() const { return stats_; }

    const std::vector<int>& star_ids() const { return star_ids_; }      // sorted
    const std::vector<std::string>& named_ids() const { return named_ids_; } // sorted
    int max_star_id() const { return star_ids_.empty() ? 0 : star_ids_.back(); }

    // Indices of traces containing the given star.
    const std::vector<int>& traces_with_star(int star_id) const;

private:
    std::vector<Trace> traces_;
    TraceSetStats stats_;
    std::vector<int> star_ids_;
    std::vector<std::string> named_ids_;
    std::vector<std::vector<int>> star_trace_index_; // parallel to star_ids_
};

// Trace file format: '#' comments, one trace per line, whitespace-separated
// tokens; named tokens match [A-Za-z0-9_.:-]+, stars are "*" or "*<digits>".
// Bare stars are numbered 1-based in reading order; mixing bare and explicit
// star tokens is rejected.
TraceSet parse_trace_set(std::istream& in);
TraceSet parse_trace_set(const std::string& text);

// Deterministic serialization with explicit star ids.
std::string serialize_trace_set(const TraceSet& ts);

// Anonymous-node label for a merged block of stars (Def.-style "*12"): ids
// sorted ascending; joined with '.' when any id in the trace set has two
// digits, to keep labels injective.
std::string anonymous_label(std::vector<int> ids, bool dotted);

} // namespace tracetopo
