#include "tracetopo/trace.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace tracetopo {

Alpha Alpha::parse(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& part) -> std::int64_t {
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("alpha must be an integer or \"p/q\", got \"" + text + "\"");
        return std::stoll(part);
    };
    if (slash == std::string::npos) return Alpha(parse_int(text), 1);
    return Alpha(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

bool Trace::contains(const Symbol& s) const { return index_of(s) >= 0; }

int Trace::index_of(const Symbol& s) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == s) return static_cast<int>(i);
    return -1;
}

int trace_distance(const Trace& t, const Symbol& a, const Symbol& b) {
    const int ia = t.index_of(a);
    const int ib = t.index_of(b);
    if (ia < 0 || ib < 0)
        throw std::invalid_argument("trace_distance: symbol not present in trace");
    return ia < ib ? ib - ia : ia - ib;
}

TraceSet::TraceSet(std::vector<Trace> traces) : traces_(std::move(traces)) {
    std::set<std::string> named;
    std::set<int> stars;
    std::set<std::pair<std::string, std::string>> named_pairs;
    std::map<int, std::vector<int>> star_traces;

    for (std::size_t ti = 0; ti < traces_.size(); ++ti) {
        const auto& t = traces_[ti];
        if (t.symbols.size() < 2)
            throw std::invalid_argument("trace " + std::to_string(ti) + ": fewer than 2 symbols");
        if (t.symbols.front().is_star() || t.symbols.back().is_star())
            throw std::invalid_argument("trace " + std::to_string(ti) + ": star at trace endpoint");
        std::set<Symbol> seen;
        for (const auto& sym : t.symbols) {
            if (!seen.insert(sym).second)
                throw std::invalid_argument("trace " + std::to_string(ti) + ": duplicate symbol " + sym.label());
            if (sym.is_star()) {
                if (!stars.insert(sym.star_id()).second)
                    throw std::invalid_argument("star *" + std::to_string(sym.star_id()) + " occurs in more than one trace");
                star_traces[sym.star_id()].push_back(static_cast<int>(ti));
            } else {
                named.insert(sym.name());
            }
        }
        for (std::size_t i = 0; i + 1 < t.symbols.size(); ++i) {
            const auto& a = t.symbols[i];
            const auto& b = t.symbols[i + 1];
            if (!a.is_star() && !b.is_star())
                named_pairs.insert(a.name() < b.name() ? std::make_pair(a.name(), b.name())
                                                       : std::make_pair(b.name(), a.name()));
        }
    }

    named_ids_.assign(named.begin(), named.end());
    star_ids_.assign(stars.begin(), stars.end());
    for (int id : star_ids_) star_trace_index_.push_back(star_traces[id]);

    stats_.n = static_cast<int>(named_ids_.size());
    stats_.s = static_cast<int>(star_ids_.size());
    stats_.N = stats_.n + stats_.s;
    stats_.nu = static_cast<int>(named_pairs.size());
}

const std::vector<int>& TraceSet::traces_with_star(int star_id) const {
    const auto it = std::lower_bound(star_ids_.begin(), star_ids_.end(), star_id);
    if (it == star_ids_.end() || *it != star_id)
        throw std::invalid_argument("unknown star id " + std::to_string(star_id));
    return star_trace_index_[static_cast<std::size_t>(it - star_ids_.begin())];
}

namespace {

bool valid_named_token(const std::string& tok) {
    if (tok.empty()) return false;
    return std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '.' || c == ':' || c == '-';
    });
}

} // namespace

TraceSet parse_trace_set(std::istream& in) {
    std::vector<Trace> traces;
    std::string line;
    int line_no = 0;
    int next_auto_id = 1;
    bool saw_auto = false;
    bool saw_explicit = false;
    std::set<int> explicit_ids;

    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        Trace trace;
        while (ls >> tok) {
            if (tok[0] == '*') {
                const std::string digits = tok.substr(1);
                if (digits.empty()) {
                    saw_auto = true;
                    trace.symbols.push_back(Symbol::star(next_auto_id++));
                } else {
                    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
                        throw parse_error(line_no, "malformed star token \"" + tok + "\"");
                    saw_explicit = true;
                    const long id = std::stol(digits);
                    if (id <= 0) throw parse_error(line_no, "star id must be positive in \"" + tok + "\"");
                    if (!explicit_ids.insert(static_cast<int>(id)).second)
                        throw parse_error(line_no, "duplicate explicit star id *" + digits);
                    trace.symbols.push_back(Symbol::star(static_cast<int>(id)));
                }
                if (saw_auto && saw_explicit)
                    throw parse_error(line_no, "mixing bare \"*\" and explicit \"*<id>\" star tokens");
            } else {
                if (!valid_named_token(tok))
                    throw parse_error(line_no, "malformed token \"" + tok + "\"");
                trace.symbols.push_back(Symbol::named(tok));
            }
        }
        if (trace.symbols.empty()) continue;
        if (trace.symbols.size() < 2) throw parse_error(line_no, "trace has fewer than 2 symbols");
        if (trace.symbols.front().is_star() || trace.symbols.back().is_star())
            throw parse_error(line_no, "star at trace endpoint");
        traces.push_back(std::move(trace));
    }

    try {
        return TraceSet(std::move(traces));
    } catch (const std::invalid_argument& e) {
        throw parse_error(line_no, e.what());
    }
}

TraceSet parse_trace_set(const std::string& text) {
    std::istringstream in(text);
    return parse_trace_set(in);
}

std::string serialize_trace_set(const TraceSet& ts) {
    std::string out;
    for (const auto& t : ts.traces()) {
        for (std::size_t i = 0; i < t.symbols.size(); ++i) {
            if (i) out += ' ';
            out += t.symbols[i].label();
        }
        out += '\n';
    }
    return out;
}

std::string anonymous_label(std::vector<int> ids, bool dotted) {
    std::sort(ids.begin(), ids.end());
    std::string out = "*";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i && dotted) out += '.';
        out += std::to_string(ids[i]);
    }
    return out;
}

} // namespace tracetopo
