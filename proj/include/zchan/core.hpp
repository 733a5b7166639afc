#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zchan {

inline constexpr int kMaxWordLength = 24;

// A binary word of length n (n <= 24). Text form is most-significant
// position first: position i (1-indexed, left to right) is bit (n - i) of
// `bits`, so the text read as a binary number equals `bits`.
struct Word {
    int length = 0;
    std::uint32_t bits = 0;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;
};

Word make_word(int length, std::uint32_t bits);
Word parse_word(std::string_view text);
std::string to_string(const Word& w);
int weight(const Word& w);

// N(a,b), N(b,a) and the derived distances.
struct ZMetrics {
    int n_ab = 0;  // positions where a=0, b=1
    int n_ba = 0;  // positions where b=0, a=1
    int d_z = 0;   // max(n_ab, n_ba)
    int d_h = 0;   // n_ab + n_ba
};

ZMetrics z_metrics(const Word& a, const Word& b);

// Channel outputs reachable from c with at most t asymmetric (1 -> 0)
// errors: every y <= c bitwise with weight(c) - weight(y) <= t.
// For t = 1 the set has exactly weight(c) + 1 elements.
std::vector<Word> downward_shadow(const Word& c, int t);

// A set of codewords of common length n with error parameter t, kept in
// canonical form: ascending as binary integers, duplicate-free.
struct Code {
    int n = 0;
    int t = 1;
    std::vector<std::uint32_t> words;

    static Code create(int n, int t, std::vector<std::uint32_t> words);

    std::size_t size() const { return words.size(); }
    Word word(std::size_t i) const { return Word{n, words[i]}; }

    friend bool operator==(const Code&, const Code&) = default;
};

struct ValidationReport {
    bool valid = false;
    std::optional<int> min_d_z;  // empty when fewer than two codewords
    bool shadows_disjoint = false;
    std::optional<std::pair<Word, Word>> violating_pair;
};

// valid iff every distinct pair is at Z-distance >= 2t. For t = 1 this is
// equivalent to pairwise disjoint downward 1-shadows, which the report
// confirms independently.
ValidationReport validate_code(const Code& c);

struct FreePointsResult {
    std::uint64_t count = 0;
    std::vector<Word> points;
};

// {0,1}^n minus the union of downward 1-shadows. Requires a valid t=1 code;
// the count then equals 2^n - sum over codewords of (weight + 1).
FreePointsResult free_points(const Code& c);
std::uint64_t free_point_count(const Code& c);

struct WeightDistribution {
    int n = 0;
    std::vector<long long> z;  // z[0..n]

    long long total() const;
    // sum of z_i * (i + 1); the number of points covered by a valid code.
    long long coverage() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

WeightDistribution weight_distribution(const Code& c);

// {x : sum of i*x_i == a (mod n+1)} with positions numbered 1..n left to
// right. Corrects one asymmetric error for every residue a.
Code vt_code(int n, int a);

// Text format "zcode v1"; see write_code for the exact layout.
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(const Code& c, std::ostream& out);
void write_code_file(const Code& c, const std::string& path);

}  // namespace zchan
