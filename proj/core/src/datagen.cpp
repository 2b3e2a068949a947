#include "lzdict/datagen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lzdict {

namespace {

constexpr char kBetaFirst = '!';  // 0x21; 32 consecutive bytes end at '@' (0x40)

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Next strictly-increasing index combination in lexicographic order.
bool next_combination(std::vector<uint32_t>& c, uint32_t n) {
    uint32_t k = static_cast<uint32_t>(c.size());
    for (uint32_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

uint64_t rng_below(std::mt19937_64& rng, uint64_t n) {
    uint64_t min = (0 - n) % n;  // 2^64 mod n; [min, 2^64) covers a whole number of residues
    for (;;) {
        uint64_t r = rng();
        if (r >= min) return r % n;
    }
}

InputSet gen_synth(const SynthParams& p) {
    if (p.alpha_len == 0 || p.beta_len == 0 || p.alpha_reps == 0 || p.beta_reps == 0)
        throw std::invalid_argument("block lengths and replication counts must be positive");
    if (p.beta_alphabet_size == 0 || p.beta_alphabet_size > 32)
        throw std::invalid_argument("the middle-block alphabet has at most 32 characters");
    if (p.beta_len > p.beta_alphabet_size)
        throw std::invalid_argument("middle blocks cannot be longer than their alphabet");
    if (!(p.scale > 0.0) || p.scale > 1.0)
        throw std::invalid_argument("scale must lie in (0, 1]");

    // Every string consumes one beta block and two alpha slots, so the string
    // count must be a multiple of beta_reps and of alpha_reps/gcd(alpha_reps,2)
    // for the pools to come out exact.
    uint64_t combos_total = binomial(p.beta_alphabet_size, p.beta_len);
    uint64_t full = p.beta_reps * combos_total;
    uint64_t alpha_step = p.alpha_reps / std::gcd<uint64_t>(p.alpha_reps, 2);
    uint64_t step = std::lcm<uint64_t>(p.beta_reps, alpha_step);
    uint64_t target = static_cast<uint64_t>(p.scale * static_cast<double>(full));
    uint64_t m = target - target % step;
    if (m == 0)
        throw std::invalid_argument("scale leaves no strings after rounding to a multiple of " +
                                    std::to_string(step));

    uint64_t gamma_n = 2 * m / p.alpha_reps;
    uint64_t alpha_space = 1;
    for (uint32_t i = 0; i < p.alpha_len && alpha_space < (uint64_t(1) << 62); ++i)
        alpha_space *= 26;
    if (gamma_n > alpha_space / 2)
        throw std::invalid_argument("alpha blocks too short for the required distinct pool");
    std::mt19937_64 rng(p.seed);

    // Distinct random alpha blocks; collisions are re-drawn.
    std::vector<std::string> gamma;
    gamma.reserve(gamma_n);
    std::unordered_set<std::string> seen_alpha;
    seen_alpha.reserve(gamma_n * 2);
    while (gamma.size() < gamma_n) {
        std::string a(p.alpha_len, 'a');
        for (auto& ch : a) ch = static_cast<char>('a' + rng_below(rng, 26));
        if (seen_alpha.insert(a).second) gamma.push_back(std::move(a));
    }

    // Alpha slots: every block index exactly alpha_reps times, shuffled.
    std::vector<uint32_t> slots(2 * m);
    for (uint64_t i = 0; i < slots.size(); ++i)
        slots[i] = static_cast<uint32_t>(i / p.alpha_reps);
    fisher_yates(slots, rng);

    // Beta blocks: the first m/beta_reps combinations in lexicographic order,
    // each spanning beta_reps consecutive strings.
    std::vector<uint32_t> combo(p.beta_len);
    std::iota(combo.begin(), combo.end(), 0);
    std::string beta(p.beta_len, kBetaFirst);

    InputSet out;
    out.strings.reserve(m);
    std::unordered_set<std::string> seen;
    seen.reserve(m * 2);
    for (uint64_t k = 0; k < m; ++k) {
        if (k && k % p.beta_reps == 0) next_combination(combo, p.beta_alphabet_size);
        for (uint32_t i = 0; i < p.beta_len; ++i)
            beta[i] = static_cast<char>(kBetaFirst + combo[i]);
        std::string s = gamma[slots[2 * k]] + beta + gamma[slots[2 * k + 1]];
        // A collision means two strings drew the same block triple; re-pair
        // this string's second slot with a later one until both are fresh.
        for (uint64_t j = k + 1; !seen.insert(s).second; ++j) {
            if (j >= m) throw std::logic_error("could not disambiguate colliding strings");
            std::swap(slots[2 * k + 1], slots[2 * j + 1]);
            s = gamma[slots[2 * k]] + beta + gamma[slots[2 * k + 1]];
        }
        out.strings.push_back(std::move(s));
    }

    if (p.sorted)
        std::sort(out.strings.begin(), out.strings.end());
    else
        fisher_yates(out.strings, rng);
    return out;
}

SynthReport verify_synth(const InputSet& input, const SynthParams& p) {
    SynthReport rep;
    auto violate = [&](std::string msg) {
        if (rep.violations.size() < 32) rep.violations.push_back(std::move(msg));
    };

    uint64_t want_len = 2 * uint64_t(p.alpha_len) + p.beta_len;
    char beta_last = static_cast<char>(kBetaFirst + p.beta_alphabet_size - 1);
    std::unordered_map<std::string, uint64_t> alpha_count, beta_count;
    std::unordered_set<std::string> distinct;
    uint64_t structural_bad = 0;

    for (const auto& s : input.strings) {
        if (!distinct.insert(s).second) violate("duplicate string: " + s);
        if (s.size() != want_len) {
            violate("string of length " + std::to_string(s.size()) + ", expected " +
                    std::to_string(want_len));
            ++structural_bad;
            continue;
        }
        bool ok = true;
        for (uint32_t i = 0; i < want_len; ++i) {
            bool in_beta_zone = i >= p.alpha_len && i < p.alpha_len + p.beta_len;
            char c = s[i];
            if (in_beta_zone ? (c < kBetaFirst || c > beta_last) : (c < 'a' || c > 'z')) {
                violate("character " + std::to_string(i) + " of " + s + " outside its alphabet");
                ok = false;
                break;
            }
        }
        if (!ok) {
            ++structural_bad;
            continue;
        }
        std::string beta = s.substr(p.alpha_len, p.beta_len);
        for (uint32_t i = 1; i < p.beta_len; ++i)
            if (beta[i] <= beta[i - 1]) {
                violate("middle block not strictly increasing: " + beta);
                break;
            }
        ++alpha_count[s.substr(0, p.alpha_len)];
        ++alpha_count[s.substr(p.alpha_len + p.beta_len)];
        ++beta_count[beta];
    }

    if (structural_bad == 0) {
        for (const auto& [block, n] : alpha_count)
            if (n != p.alpha_reps)
                violate("alpha block " + block + " used " + std::to_string(n) + "x, expected " +
                        std::to_string(p.alpha_reps));
        for (const auto& [block, n] : beta_count)
            if (n != p.beta_reps)
                violate("beta block " + block + " used " + std::to_string(n) + "x, expected " +
                        std::to_string(p.beta_reps));
    }
    return rep;
}

}  // namespace lzdict
