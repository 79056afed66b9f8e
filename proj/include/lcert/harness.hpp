#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcert/graph.hpp"
#include "lcert/oracles.hpp"
#include "lcert/pls.hpp"
#include "lcert/scheme_tag.hpp"

namespace lcert {

// ---- fixtures ----

struct Verdict {
    Membership value = Membership::Unknown;
    std::string provenance;  // which construction or oracle run decided it
};

struct FixtureEntry {
    std::string name;
    Graph graph;
    std::map<SchemeTag, Verdict> verdicts;
    std::string note;

    Membership verdict(SchemeTag t) const;
};

class FixtureRegistry {
public:
    // Throws MalformedModel when a yes/no verdict has no provenance.
    void add(FixtureEntry e);
    const FixtureEntry& get(const std::string& name) const;  // BadIndex when missing
    const std::vector<FixtureEntry>& all() const { return entries_; }

private:
    std::vector<FixtureEntry> entries_;
};

// The built-in no-instances, each verdict decided by an oracle run at construction.
const FixtureRegistry& builtin_fixtures();

struct NoPair {
    std::string fixture;
    SchemeTag scheme;
};
// Soundness targets; pairs whose oracle verdict is not "no" are dropped.
std::vector<NoPair> soundness_pairs();

// ---- campaigns ----

struct CampaignConfig {
    SchemeTag scheme = SchemeTag::Chordal;
    int n_lo = 4, n_hi = 48;
    int instances = 200;
    long iters = 100000;
    std::uint64_t seed = 1;
    std::vector<Corruption> mix{std::begin(kAllCorruptions), std::end(kAllCorruptions)};
    std::string out;
};
// Counts positive, n range inside the per-scheme cap.
void validate_config(const CampaignConfig& c);
int scheme_n_cap(SchemeTag t);

struct FuzzResult {
    std::string fixture;
    SchemeTag scheme = SchemeTag::Chordal;
    long iters = 0;
    long accepts = 0;
    long uniform = 0, shaped = 0;
    std::vector<std::uint64_t> accepting_seeds;  // sorted
    double wall_ms = 0;
};

// Half uniform redraws, half honest certificates of a same-size yes-instance
// (wearing the fixture's ids) with 0-3 corruptions. MalformedModel when the
// fixture is not a registered no-instance for the scheme.
FuzzResult fuzz_pair(const FixtureEntry& f, SchemeTag scheme, long iters, std::uint64_t seed,
                     const std::vector<Corruption>& mix);
// The certificate assignment used for a given iteration seed (for replaying findings).
Certs fuzz_sample(const FixtureEntry& f, SchemeTag scheme, std::uint64_t seed, const std::vector<Corruption>& mix);

struct SweepFailure {
    int n = 0;
    std::uint64_t seed = 0;
    std::string what;
};
struct SweepResult {
    SchemeTag scheme = SchemeTag::Chordal;
    int runs = 0;
    int accepts = 0;
    std::vector<SweepFailure> failures;
};
SweepResult completeness_sweep(const CampaignConfig& c);

// ---- certificate size ----

struct BitsConstants {
    int K = 0;
    int C = 0;
};
BitsConstants bits_constants(SchemeTag t);

struct BitsRow {
    int n = 0;
    int bits = 0;
    int log2n = 0;
    double ratio = 0;  // bits / ceil(log2 n)
    bool within = false;
    bool measured = false;  // false: honest certificate shape evaluated at n
};
std::vector<BitsRow> bits_table(SchemeTag t, const std::vector<int>& ns, std::uint64_t seed);
inline constexpr int kMeasuredBitsCap = 1024;

int ceil_log2(std::int64_t x);

// ---- report text ----
std::string fuzz_to_json(const std::vector<FuzzResult>& rs);
std::string sweep_to_json(const std::vector<SweepResult>& rs);
std::string bits_to_json(SchemeTag t, const std::vector<BitsRow>& rows);
std::string bits_to_csv(SchemeTag t, const std::vector<BitsRow>& rows);

}  // namespace lcert
