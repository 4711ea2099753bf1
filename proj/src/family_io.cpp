#include "qsp/family_io.hpp"

#include <fstream>
#include <sstream>

#include "qsp/bits.hpp"

namespace qsp {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw Error(Errc::parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

int parse_int_field(const std::vector<std::string>& toks, const std::string& key, int line) {
    if (toks.size() != 2 || toks[0] != key) fail(line, "expected '" + key + " <n>'");
    try {
        return std::stoi(toks[1]);
    } catch (const std::exception&) {
        fail(line, "'" + toks[1] + "' is not an integer");
    }
}

} // namespace

FunctionFamily parse_family(const std::string& text) {
    FunctionFamily fam;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    int header = 0; // family, x_bits, v_bits, solution_bits in order
    bool saw_member = false;

    while (std::getline(in, raw)) {
        ++line;
        const auto toks = tokenize(raw);
        if (toks.empty()) continue;

        if (header < 4) {
            switch (header) {
            case 0:
                if (toks.size() != 2 || toks[0] != "family") fail(line, "expected 'family <name>'");
                fam.name = toks[1];
                break;
            case 1: fam.x_bits = parse_int_field(toks, "x_bits", line); break;
            case 2: fam.v_bits = parse_int_field(toks, "v_bits", line); break;
            case 3: fam.solution_bits = parse_int_field(toks, "solution_bits", line); break;
            }
            ++header;
            continue;
        }

        if (toks[0] == "meta") {
            if (!saw_member) fail(line, "meta line before any member");
            if (toks.size() != 2) fail(line, "expected 'meta h=<bits>' or 'meta a=<bits>'");
            const auto eq = toks[1].find('=');
            if (eq == std::string::npos) fail(line, "malformed meta token '" + toks[1] + "'");
            const std::string key = toks[1].substr(0, eq);
            const std::string val = toks[1].substr(eq + 1);
            if (!is_bit_string(val)) fail(line, "meta value '" + val + "' is not a bit string");
            const std::string& owner = fam.members.back().k_label;
            if (key == "h")
                fam.meta_h[owner] = val;
            else if (key == "a")
                fam.meta_a[owner] = val;
            else
                fail(line, "unknown meta key '" + key + "'");
            continue;
        }

        // k <bits> : <values...> ; solution <bits>
        if (toks[0] != "k") fail(line, "expected a member line starting with 'k'");
        std::size_t at = 1;
        if (at >= toks.size() || !is_bit_string(toks[at])) fail(line, "missing member label");
        OracleFunction member;
        member.k_label = toks[at++];
        for (auto& existing : fam.members)
            if (existing.k_label == member.k_label) fail(line, "duplicate k '" + member.k_label + "'");
        if (at >= toks.size() || toks[at] != ":") fail(line, "expected ':' after the member label");
        ++at;
        while (at < toks.size() && toks[at] != ";") {
            const std::string& v = toks[at++];
            if (!is_bit_string(v)) fail(line, "value '" + v + "' is not a bit string");
            if (v.size() != static_cast<std::size_t>(fam.v_bits))
                fail(line, "value '" + v + "' is not " + std::to_string(fam.v_bits) + " bits wide");
            member.table.push_back(static_cast<unsigned>(parse_bits(v)));
        }
        if (member.table.size() != (std::size_t{1} << fam.x_bits))
            fail(line, "member '" + member.k_label + "' lists " + std::to_string(member.table.size()) +
                           " values, expected " + std::to_string(std::size_t{1} << fam.x_bits));
        if (at >= toks.size() || toks[at] != ";") fail(line, "expected ';' after the values");
        ++at;
        if (at + 1 >= toks.size() || toks[at] != "solution") fail(line, "missing solution");
        const std::string sol = toks[at + 1];
        if (!is_bit_string(sol) || sol.size() != static_cast<std::size_t>(fam.solution_bits))
            fail(line, "solution '" + sol + "' is not " + std::to_string(fam.solution_bits) + " bits wide");
        if (at + 2 != toks.size()) fail(line, "trailing tokens after the solution");

        fam.members.push_back(std::move(member));
        fam.solutions.push_back(sol);
        saw_member = true;
    }

    if (header < 4) fail(line, "incomplete header");
    if (fam.members.empty()) fail(line, "family has no members");

    const auto violations = validate_family(fam);
    if (!violations.empty()) fail(line, "invalid family: " + violations.front());
    return fam;
}

std::string serialize_family(const FunctionFamily& fam) {
    std::ostringstream out;
    out << "family " << fam.name << "\n";
    out << "x_bits " << fam.x_bits << "\n";
    out << "v_bits " << fam.v_bits << "\n";
    out << "solution_bits " << fam.solution_bits << "\n";
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const auto& m = fam.members[i];
        out << "k " << m.k_label << " :";
        for (unsigned v : m.table) out << " " << to_bits(v, fam.v_bits);
        out << " ; solution " << fam.solutions[i] << "\n";
        if (auto it = fam.meta_h.find(m.k_label); it != fam.meta_h.end()) out << "meta h=" << it->second << "\n";
        if (auto it = fam.meta_a.find(m.k_label); it != fam.meta_a.end()) out << "meta a=" << it->second << "\n";
    }
    return out.str();
}

FunctionFamily load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::usage, "cannot open family file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family(buf.str());
}

} // namespace qsp
