#include "critcol/error.hpp"
#include "critcol/reductions.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>

namespace critcol {

namespace {

std::string join_violations(const std::vector<FormulaViolation>& vs)
{
    std::string out = "invalid formula:";
    for (const auto& v : vs) {
        out += "\n  ";
        if (v.line > 0)
            out += "line " + std::to_string(v.line) + ": ";
        out += v.message;
    }
    return out;
}

} // namespace

FormulaError::FormulaError(std::vector<FormulaViolation> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations))
{
}

std::vector<FormulaViolation> validate(const Formula& f)
{
    std::vector<FormulaViolation> out;
    if (f.n < 1)
        out.push_back({0, "formula needs at least one variable"});
    if (static_cast<int>(f.clauses.size()) != f.n)
        out.push_back({0, "clause count " + std::to_string(f.clauses.size()) + " differs from variable count " +
                              std::to_string(f.n)});
    std::vector<int> occurrences(std::max(f.n, 0), 0);
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        const auto& cl = f.clauses[c];
        for (int x : cl) {
            if (x < 0 || x >= f.n)
                out.push_back({0, "clause " + std::to_string(c + 1) + " uses unknown variable " + std::to_string(x + 1)});
            else
                ++occurrences[x];
        }
        if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
            out.push_back({0, "clause " + std::to_string(c + 1) + " repeats a variable"});
    }
    for (int x = 0; x < f.n; ++x) {
        if (occurrences[x] != 3)
            out.push_back({0, "variable " + std::to_string(x + 1) + " occurs " + std::to_string(occurrences[x]) +
                                  " times, expected 3"});
    }
    return out;
}

Formula parse_formula(std::string_view text)
{
    std::vector<FormulaViolation> errors;
    std::istringstream in{std::string(text)};
    Formula f;
    bool have_header = false;
    std::vector<int> clause_line;
    std::string line;
    for (int ln = 1; std::getline(in, line); ++ln) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream iss(line.substr(first));
        std::string kind;
        iss >> kind;
        if (kind == "p") {
            std::string format;
            int n = 0;
            if (have_header) {
                errors.push_back({ln, "duplicate header"});
            } else if (!(iss >> format >> n) || format != "m1in3" || n < 1) {
                errors.push_back({ln, "expected `p m1in3 <n>` with n >= 1"});
            } else {
                f.n = n;
                have_header = true;
            }
            continue;
        }
        if (kind == "c") {
            if (!have_header) {
                errors.push_back({ln, "clause before header"});
                continue;
            }
            std::array<int, 3> cl{};
            std::string extra;
            if (!(iss >> cl[0] >> cl[1] >> cl[2]) || (iss >> extra)) {
                errors.push_back({ln, "expected `c <v1> <v2> <v3>`"});
                continue;
            }
            bool in_range = true;
            for (int& x : cl) {
                if (x < 1 || x > f.n) {
                    errors.push_back({ln, "variable " + std::to_string(x) + " out of range 1.." + std::to_string(f.n)});
                    in_range = false;
                }
                --x;
            }
            if (!in_range)
                continue;
            if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
                errors.push_back({ln, "clause repeats a variable"});
            f.clauses.push_back(cl);
            clause_line.push_back(ln);
            continue;
        }
        errors.push_back({ln, "unknown line type `" + kind + "`"});
    }
    if (!have_header)
        errors.push_back({0, "missing `p m1in3 <n>` header"});
    if (have_header && static_cast<int>(f.clauses.size()) != f.n)
        errors.push_back({0, "found " + std::to_string(f.clauses.size()) + " clauses, header declares " +
                                 std::to_string(f.n)});
    if (have_header) {
        // occurrence counts, reported at the clause line that pushes a
        // variable past three (or globally when it falls short)
        std::vector<int> occ(f.n, 0);
        for (std::size_t c = 0; c < f.clauses.size(); ++c) {
            for (int x : f.clauses[c]) {
                if (++occ[x] == 4)
                    errors.push_back({clause_line[c], "variable " + std::to_string(x + 1) + " occurs more than 3 times"});
            }
        }
        for (int x = 0; x < f.n; ++x) {
            if (occ[x] < 3)
                errors.push_back({0, "variable " + std::to_string(x + 1) + " occurs " + std::to_string(occ[x]) +
                                         " times, expected 3"});
        }
    }
    if (!errors.empty())
        throw FormulaError(std::move(errors));
    return f;
}

Formula read_formula_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_formula(buf.str());
}

std::string to_string(const Formula& f, std::string_view comment)
{
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream lines{std::string(comment)};
        for (std::string line; std::getline(lines, line);)
            out << "# " << line << '\n';
    }
    out << "p m1in3 " << f.n << '\n';
    for (const auto& cl : f.clauses)
        out << "c " << cl[0] + 1 << ' ' << cl[1] + 1 << ' ' << cl[2] + 1 << '\n';
    return out.str();
}

void write_formula_file(const std::filesystem::path& path, const Formula& f, std::string_view comment)
{
    std::ofstream out(path);
    if (!out)
        throw ArgumentError("cannot write " + path.string());
    out << to_string(f, comment);
}

bool is_one_in_three(const Formula& f, const std::vector<bool>& assignment)
{
    if (assignment.size() != static_cast<std::size_t>(f.n))
        return false;
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& cl) {
        return assignment[cl[0]] + assignment[cl[1]] + assignment[cl[2]] == 1;
    });
}

std::optional<std::vector<bool>> oracle_1in3(const Formula& f)
{
    if (f.n > 24)
        throw ResourceError("oracle_1in3 supports at most 24 variables, got " + std::to_string(f.n));
    std::vector<std::uint32_t> masks;
    masks.reserve(f.clauses.size());
    for (const auto& cl : f.clauses)
        masks.push_back((1U << cl[0]) | (1U << cl[1]) | (1U << cl[2]));
    const std::uint32_t limit = f.n == 0 ? 1U : (1U << f.n);
    for (std::uint32_t a = 0; a < limit; ++a) {
        bool ok = true;
        for (std::uint32_t m : masks) {
            if (std::popcount(a & m) != 1) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        std::vector<bool> assignment(f.n);
        for (int x = 0; x < f.n; ++x)
            assignment[x] = (a >> x) & 1U;
        if (!is_one_in_three(f, assignment))
            throw Error("oracle_1in3 assignment failed re-verification");
        return assignment;
    }
    return std::nullopt;
}

Formula random_formula(int n, std::uint64_t seed)
{
    if (n < 3)
        throw ArgumentError("random_formula needs n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(3 * n);
    for (int x = 0; x < n; ++x)
        stubs.insert(stubs.end(), 3, x);
    std::shuffle(stubs.begin(), stubs.end(), rng);

    auto bad_slot = [&](int c) -> int {
        const int a = stubs[3 * c];
        const int b = stubs[3 * c + 1];
        const int d = stubs[3 * c + 2];
        if (a == b || a == d)
            return 3 * c;
        if (b == d)
            return 3 * c + 1;
        return -1;
    };

    const int budget = 1000 * n;
    for (int attempt = 0; attempt < budget; ++attempt) {
        int c = 0;
        int slot = -1;
        for (; c < n; ++c) {
            slot = bad_slot(c);
            if (slot >= 0)
                break;
        }
        if (slot < 0) {
            Formula f;
            f.n = n;
            for (int k = 0; k < n; ++k)
                f.clauses.push_back({stubs[3 * k], stubs[3 * k + 1], stubs[3 * k + 2]});
            return f;
        }
        // swap the repeated stub with a uniformly chosen stub elsewhere
        std::uniform_int_distribution<int> pick(0, 3 * n - 1);
        int other = pick(rng);
        while (other / 3 == c)
            other = pick(rng);
        std::swap(stubs[slot], stubs[other]);
    }
    throw GenerationError("random_formula(n=" + std::to_string(n) + ", seed=" + std::to_string(seed) +
                          ") exhausted its repair budget");
}

} // namespace critcol
