#include "rlse/io.hpp"

#include <fstream>
#include <sstream>

#include "rlse/errors.hpp"

namespace rlse {

namespace {

// Returns the next non-empty line with comments stripped.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::vector<int> read_row(std::istream& in, int expect, const char* what) {
    std::string line;
    if (!next_line(in, line)) throw ParseError(std::string("unexpected end of ") + what);
    auto toks = tokens_of(line);
    if (static_cast<int>(toks.size()) != expect)
        throw ParseError(std::string(what) + ": expected " + std::to_string(expect) +
                         " entries, got " + std::to_string(toks.size()));
    std::vector<int> row;
    for (const auto& t : toks) {
        try {
            row.push_back(std::stoi(t));
        } catch (const std::exception&) {
            throw ParseError(std::string(what) + ": bad index '" + t + "'");
        }
    }
    return row;
}

std::vector<int> read_matrix(std::istream& in, int size, const char* what) {
    std::vector<int> tab;
    tab.reserve(size * size);
    for (int r = 0; r < size; ++r) {
        auto row = read_row(in, size, what);
        tab.insert(tab.end(), row.begin(), row.end());
    }
    return tab;
}

int parse_int(const std::string& s, const char* what) {
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + ": '" + s + "'");
    }
}

}  // namespace

AlgebraVariant read_algebra(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("empty algebra file");
    auto header = tokens_of(line);
    if (header.size() != 4) throw ParseError("header must be: <kind> <size> <zero> <one>");
    const std::string kind = header[0];
    int size = parse_int(header[1], "size");
    int zero = parse_int(header[2], "zero");
    int one = parse_int(header[3], "one");
    if (size < 1) throw ParseError("size must be positive");

    std::vector<std::string> names;
    std::streampos pos = in.tellg();
    if (next_line(in, line)) {
        auto toks = tokens_of(line);
        if (!toks.empty() && toks[0] == "names") {
            if (static_cast<int>(toks.size()) != size + 1)
                throw ParseError("names line must list one label per element");
            names.assign(toks.begin() + 1, toks.end());
        } else {
            in.clear();
            in.seekg(pos);
        }
    }

    if (kind == "rlse") {
        RingLikeAlgebra alg;
        alg.size = size;
        alg.zero = zero;
        alg.one = one;
        alg.element_names = names;
        alg.plus_tab = read_matrix(in, size, "plus matrix");
        alg.times_tab = read_matrix(in, size, "times matrix");
        alg.validate();
        return alg;
    }
    if (kind == "oml") {
        OrthoLattice lat;
        lat.size = size;
        lat.zero = zero;
        lat.one = one;
        lat.element_names = names;
        lat.meet_tab = read_matrix(in, size, "meet matrix");
        lat.join_tab = read_matrix(in, size, "join matrix");
        lat.comp_tab = read_row(in, size, "comp row");
        lat.validate();
        return lat;
    }
    throw ParseError("unknown kind '" + kind + "' (expected rlse or oml)");
}

AlgebraVariant read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_algebra(in);
}

namespace {

void write_matrix(std::ostream& out, const std::vector<int>& tab, int size) {
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) out << (c ? " " : "") << tab[r * size + c];
        out << "\n";
    }
}

void write_names(std::ostream& out, const std::vector<std::string>& names) {
    if (names.empty()) return;
    out << "names";
    for (const auto& n : names) out << " " << n;
    out << "\n";
}

}  // namespace

void write_algebra(std::ostream& out, const RingLikeAlgebra& alg) {
    out << "rlse " << alg.size << " " << alg.zero << " " << alg.one << "\n";
    write_names(out, alg.element_names);
    write_matrix(out, alg.plus_tab, alg.size);
    write_matrix(out, alg.times_tab, alg.size);
}

void write_algebra(std::ostream& out, const OrthoLattice& lat) {
    out << "oml " << lat.size << " " << lat.zero << " " << lat.one << "\n";
    write_names(out, lat.element_names);
    write_matrix(out, lat.meet_tab, lat.size);
    write_matrix(out, lat.join_tab, lat.size);
    for (int i = 0; i < lat.size; ++i) out << (i ? " " : "") << lat.comp_tab[i];
    out << "\n";
}

void write_algebra_file(const std::string& path, const AlgebraVariant& alg) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    std::visit([&](const auto& a) { write_algebra(out, a); }, alg);
}

EventFamily read_events(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("empty event file");
    auto header = tokens_of(line);
    if (header.size() < 2 || header[0] != "states")
        throw ParseError("event file must start with: states <labels>");
    StateSpace space = StateSpace::make({header.begin() + 1, header.end()});
    std::vector<NumericalEvent> events;
    std::vector<std::string> names;
    while (next_line(in, line)) {
        auto toks = tokens_of(line);
        if (static_cast<int>(toks.size()) != space.size() + 1)
            throw ParseError("event row must be: <name> followed by " +
                             std::to_string(space.size()) + " rationals");
        NumericalEvent e;
        for (int s = 0; s < space.size(); ++s)
            e.values.push_back(parse_rational(toks[s + 1]));
        names.push_back(toks[0]);
        events.push_back(std::move(e));
    }
    EventFamily fam = EventFamily::make(std::move(space), std::move(events));
    fam.event_names = std::move(names);
    return fam;
}

EventFamily read_events_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_events(in);
}

void write_events(std::ostream& out, const EventFamily& fam) {
    out << "states";
    for (const auto& l : fam.space.labels) out << " " << l;
    out << "\n";
    for (int i = 0; i < fam.size(); ++i) {
        out << fam.event_name(i);
        for (const auto& v : fam.events[i].values) out << " " << to_string(v);
        out << "\n";
    }
}

void write_events_file(const std::string& path, const EventFamily& fam) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    write_events(out, fam);
}

}  // namespace rlse
