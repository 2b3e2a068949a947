#include "lzdict/phrase_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lzdict {

namespace {

uint8_t symbol_width(uint64_t p) { return p <= 1 ? 0 : PackedInts::bits_for(p - 1); }

// C layout shared by the global and per-range vectors: for each phrase q in
// ID order, a 1-bit followed by one 0-bit per covered parsing whose first
// phrase is q. Requires the parsings to be grouped by first phrase in ID
// order, which every sorted arrangement here guarantees.
BitVector make_first_phrase_bits(const std::vector<uint64_t>& counts_per_phrase, uint64_t n) {
    BitVector c;
    c.reserve(counts_per_phrase.size() + n);
    for (uint64_t cnt : counts_per_phrase) {
        c.push_back(true);
        for (uint64_t i = 0; i < cnt; ++i) c.push_back(false);
    }
    c.build();
    return c;
}

}  // namespace

bool LinearizedIndex::omission_pays(uint64_t n_strings, uint64_t p) {
    return n_strings * symbol_width(p) > n_strings + p;
}

std::vector<bool> LinearizedIndex::choose_combined_ranges(const std::vector<uint64_t>& hist,
                                                          uint64_t p) {
    std::vector<bool> flags(hist.size());
    for (size_t i = 0; i < hist.size(); ++i) flags[i] = omission_pays(hist[i], p);
    return flags;
}

LinearizedIndex::BuildResult LinearizedIndex::build(
    const std::vector<std::vector<uint32_t>>& parsings, uint64_t p, Variant variant,
    uint32_t threshold) {
    if (threshold == 0) throw std::invalid_argument("length threshold must be positive");
    if (p > UINT32_MAX) throw std::invalid_argument("phrase set too large");
    uint64_t m = parsings.size();
    for (const auto& seq : parsings) {
        if (seq.empty()) throw std::invalid_argument("parsings must be non-empty");
        for (uint32_t sym : seq)
            if (sym >= p)
                throw std::invalid_argument("parsing references phrase ID " + std::to_string(sym) +
                                            " outside [0, " + std::to_string(p) + ")");
    }

    BuildResult out;
    LinearizedIndex& ix = out.index;
    ix.variant_ = variant;
    ix.t_ = threshold;
    ix.m_ = m;
    ix.p_ = p;

    bool by_length = variant == Variant::length_sorted || variant == Variant::combined;
    std::vector<uint64_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](uint64_t a, uint64_t b) {
        if (by_length) {
            uint64_t ga = parsings[a].size() <= threshold ? parsings[a].size() : uint64_t(threshold) + 1;
            uint64_t gb = parsings[b].size() <= threshold ? parsings[b].size() : uint64_t(threshold) + 1;
            if (ga != gb) return ga < gb;
        }
        return parsings[a] < parsings[b];
    });
    for (uint64_t i = 1; i < m; ++i)
        if (parsings[order[i - 1]] == parsings[order[i]])
            throw std::invalid_argument("duplicate parsings cannot be indexed");

    out.permutation.resize(m);
    for (uint64_t i = 0; i < m; ++i) out.permutation[order[i]] = i;

    uint8_t width = symbol_width(p);
    uint64_t total_syms = 0;
    for (const auto& seq : parsings) total_syms += seq.size();

    if (variant == Variant::base || variant == Variant::first_omitted) {
        bool omit = variant == Variant::first_omitted;
        uint64_t stored = omit ? total_syms - m : total_syms;
        ix.s_ = PackedInts(width, stored);
        ix.b_.reserve(total_syms);
        std::vector<uint64_t> first_counts(omit ? p : 0, 0);
        uint64_t sym = 0;
        for (uint64_t i = 0; i < m; ++i) {
            const auto& seq = parsings[order[i]];
            for (size_t j = 0; j < seq.size(); ++j) {
                ix.b_.push_back(j == 0);
                if (omit && j == 0) continue;
                ix.s_.set(sym++, seq[j]);
            }
            if (omit) ++first_counts[seq[0]];
        }
        ix.b_.build();
        if (omit) ix.c_ = make_first_phrase_bits(first_counts, m);
    } else {
        // Group sizes per length 1..t; everything longer goes to the tail.
        std::vector<uint64_t> hist(threshold, 0);
        uint64_t tail_strings = 0, tail_syms = 0;
        for (const auto& seq : parsings) {
            if (seq.size() <= threshold) {
                ++hist[seq.size() - 1];
            } else {
                ++tail_strings;
                tail_syms += seq.size();
            }
        }
        ix.c_enabled_.assign(threshold, false);
        if (variant == Variant::combined) ix.c_enabled_ = choose_combined_ranges(hist, p);

        ix.range_str_.resize(threshold + 1);
        ix.range_sym_.resize(threshold + 1);
        uint64_t str_at = 0, sym_at = 0;
        for (uint32_t l = 1; l <= threshold; ++l) {
            ix.range_str_[l - 1] = str_at;
            ix.range_sym_[l - 1] = sym_at;
            uint64_t stride = ix.c_enabled_[l - 1] ? l - 1 : l;
            str_at += hist[l - 1];
            sym_at += hist[l - 1] * stride;
        }
        ix.range_str_[threshold] = str_at;
        ix.range_sym_[threshold] = sym_at;

        ix.s_ = PackedInts(width, sym_at + tail_syms);
        ix.b_.reserve(tail_syms);
        std::vector<std::vector<uint64_t>> first_counts(threshold);
        for (uint32_t l = 1; l <= threshold; ++l)
            if (ix.c_enabled_[l - 1]) first_counts[l - 1].assign(p, 0);

        uint64_t sym = 0;
        for (uint64_t i = 0; i < m; ++i) {
            const auto& seq = parsings[order[i]];
            if (seq.size() <= threshold) {
                bool omit = ix.c_enabled_[seq.size() - 1];
                if (omit) ++first_counts[seq.size() - 1][seq[0]];
                for (size_t j = omit ? 1 : 0; j < seq.size(); ++j) ix.s_.set(sym++, seq[j]);
            } else {
                for (size_t j = 0; j < seq.size(); ++j) {
                    ix.b_.push_back(j == 0);
                    ix.s_.set(sym++, seq[j]);
                }
            }
        }
        ix.b_.build();
        for (uint32_t l = 1; l <= threshold; ++l)
            if (ix.c_enabled_[l - 1])
                ix.c_ranges_.push_back(make_first_phrase_bits(first_counts[l - 1], hist[l - 1]));
    }
    return out;
}

std::vector<uint32_t> LinearizedIndex::read_symbols(uint64_t sym, uint64_t len) const {
    std::vector<uint32_t> out(len);
    for (uint64_t i = 0; i < len; ++i) out[i] = static_cast<uint32_t>(s_.get(sym + i));
    return out;
}

int LinearizedIndex::compare_entry(uint64_t sym, uint64_t len, const uint32_t* seq,
                                   uint64_t seq_len) const {
    uint64_t n = std::min(len, seq_len);
    for (uint64_t i = 0; i < n; ++i) {
        uint64_t v = s_.get(sym + i);
        if (v != seq[i]) return v < seq[i] ? -1 : 1;
    }
    if (len == seq_len) return 0;
    return len < seq_len ? -1 : 1;
}

std::pair<uint64_t, uint64_t> LinearizedIndex::c_block(const BitVector& c, uint64_t q,
                                                       uint64_t n) const {
    // The zeros trailing the (q+1)-th 1-bit are the covered parsings whose
    // first phrase is q; subtracting the preceding 1-bits turns positions
    // into parsing indices.
    uint64_t lo = c.select1(q) - q;
    uint64_t hi = (q + 1 < p_) ? c.select1(q + 1) - (q + 1) : n;
    return {lo, hi};
}

std::vector<uint32_t> LinearizedIndex::access(uint64_t id) const {
    if (id >= m_) throw std::out_of_range("LinearizedIndex::access: ID " + std::to_string(id));

    switch (variant_) {
        case Variant::base: {
            uint64_t start = b_.select1(id);
            uint64_t end = (id + 1 < m_) ? b_.select1(id + 1) : s_.size();
            return read_symbols(start, end - start);
        }
        case Variant::first_omitted: {
            uint32_t first = static_cast<uint32_t>(c_.rank1(c_.select0(id)) - 1);
            uint64_t vstart = b_.select1(id);
            uint64_t vend = (id + 1 < m_) ? b_.select1(id + 1) : b_.size();
            // Stored positions: virtual minus the starts seen so far.
            std::vector<uint32_t> out;
            out.reserve(vend - vstart);
            out.push_back(first);
            uint64_t sym = vstart - id;
            for (uint64_t i = 0; i + 1 < vend - vstart; ++i)
                out.push_back(static_cast<uint32_t>(s_.get(sym + i)));
            return out;
        }
        default: {
            if (id >= range_str_[t_]) {  // lex-sorted tail
                uint64_t j = id - range_str_[t_];
                uint64_t tail_n = m_ - range_str_[t_];
                uint64_t start = b_.select1(j);
                uint64_t end = (j + 1 < tail_n) ? b_.select1(j + 1) : b_.size();
                return read_symbols(range_sym_[t_] + start, end - start);
            }
            uint32_t l = 1;
            while (l < t_ && range_str_[l] <= id) ++l;
            uint64_t rel = id - range_str_[l - 1];
            if (variant_ == Variant::combined && c_enabled_[l - 1]) {
                const BitVector& c = c_for_range(l);
                uint32_t first = static_cast<uint32_t>(c.rank1(c.select0(rel)) - 1);
                std::vector<uint32_t> out;
                out.reserve(l);
                out.push_back(first);
                uint64_t sym = range_sym_[l - 1] + rel * (l - 1);
                for (uint64_t i = 0; i + 1 < l; ++i) out.push_back(static_cast<uint32_t>(s_.get(sym + i)));
                return out;
            }
            return read_symbols(range_sym_[l - 1] + rel * l, l);
        }
    }
}

int64_t LinearizedIndex::lookup(const std::vector<uint32_t>& seq) const {
    if (seq.empty() || m_ == 0) return -1;
    for (uint32_t sym : seq)
        if (sym >= p_) return -1;

    auto bsearch = [&](uint64_t lo, uint64_t hi, auto window, const uint32_t* s, uint64_t n) -> int64_t {
        while (lo < hi) {
            uint64_t mid = lo + (hi - lo) / 2;
            auto [sym, len] = window(mid);
            int c = compare_entry(sym, len, s, n);
            if (c < 0) lo = mid + 1;
            else if (c > 0) hi = mid;
            else return static_cast<int64_t>(mid);
        }
        return -1;
    };

    switch (variant_) {
        case Variant::base: {
            auto window = [&](uint64_t i) -> std::pair<uint64_t, uint64_t> {
                uint64_t start = b_.select1(i);
                uint64_t end = (i + 1 < m_) ? b_.select1(i + 1) : s_.size();
                return {start, end - start};
            };
            return bsearch(0, m_, window, seq.data(), seq.size());
        }
        case Variant::first_omitted: {
            auto [lo, hi] = c_block(c_, seq[0], m_);
            auto window = [&](uint64_t i) -> std::pair<uint64_t, uint64_t> {
                uint64_t vstart = b_.select1(i);
                uint64_t vend = (i + 1 < m_) ? b_.select1(i + 1) : b_.size();
                return {vstart - i, vend - vstart - 1};
            };
            return bsearch(lo, hi, window, seq.data() + 1, seq.size() - 1);
        }
        default: {
            uint64_t k = seq.size();
            if (k > t_) {  // search the lex-sorted tail
                uint64_t tail_n = m_ - range_str_[t_];
                auto window = [&](uint64_t j) -> std::pair<uint64_t, uint64_t> {
                    uint64_t start = b_.select1(j);
                    uint64_t end = (j + 1 < tail_n) ? b_.select1(j + 1) : b_.size();
                    return {range_sym_[t_] + start, end - start};
                };
                int64_t hit = bsearch(0, tail_n, window, seq.data(), seq.size());
                return hit < 0 ? -1 : hit + static_cast<int64_t>(range_str_[t_]);
            }
            uint64_t base_id = range_str_[k - 1];
            uint64_t n_k = range_str_[k] - base_id;
            if (n_k == 0) return -1;
            if (variant_ == Variant::combined && c_enabled_[k - 1]) {
                auto [lo, hi] = c_block(c_for_range(static_cast<uint32_t>(k)), seq[0], n_k);
                auto window = [&](uint64_t rel) -> std::pair<uint64_t, uint64_t> {
                    return {range_sym_[k - 1] + rel * (k - 1), k - 1};
                };
                int64_t hit = bsearch(lo, hi, window, seq.data() + 1, seq.size() - 1);
                return hit < 0 ? -1 : hit + static_cast<int64_t>(base_id);
            }
            auto window = [&](uint64_t rel) -> std::pair<uint64_t, uint64_t> {
                return {range_sym_[k - 1] + rel * k, k};
            };
            int64_t hit = bsearch(0, n_k, window, seq.data(), seq.size());
            return hit < 0 ? -1 : hit + static_cast<int64_t>(base_id);
        }
    }
}

void LinearizedIndex::save(ByteWriter& w) const {
    w.put_u8(static_cast<uint8_t>(variant_));
    w.put_u32(t_);
    w.put_u64(m_);
    w.put_u64(p_);
    s_.save(w);
    b_.save(w);
    if (variant_ == Variant::first_omitted) c_.save(w);
    if (variant_ == Variant::length_sorted || variant_ == Variant::combined) {
        for (uint64_t v : range_str_) w.put_u64(v);
        for (uint64_t v : range_sym_) w.put_u64(v);
    }
    if (variant_ == Variant::combined) {
        for (uint32_t i = 0; i < (t_ + 7) / 8; ++i) {
            uint8_t byte = 0;
            for (uint32_t b = 0; b < 8 && i * 8 + b < t_; ++b)
                if (c_enabled_[i * 8 + b]) byte |= uint8_t(1) << b;
            w.put_u8(byte);
        }
        for (const auto& c : c_ranges_) c.save(w);
    }
}

LinearizedIndex LinearizedIndex::load(ByteReader& r) {
    LinearizedIndex ix;
    uint8_t v = r.get_u8();
    if (v > static_cast<uint8_t>(Variant::combined))
        throw LoadError(LoadError::Kind::malformed, "unknown index variant " + std::to_string(v));
    ix.variant_ = static_cast<Variant>(v);
    ix.t_ = r.get_u32();
    if (ix.t_ == 0) throw LoadError(LoadError::Kind::malformed, "length threshold 0");
    ix.m_ = r.get_u64();
    ix.p_ = r.get_u64();
    if (ix.p_ > UINT32_MAX) throw LoadError(LoadError::Kind::malformed, "phrase count out of range");
    ix.s_ = PackedInts::load(r);
    if (ix.s_.width() != symbol_width(ix.p_))
        throw LoadError(LoadError::Kind::malformed, "symbol width does not match phrase count");
    ix.b_ = BitVector::load(r);

    auto check = [](bool ok, const char* what) {
        if (!ok) throw LoadError(LoadError::Kind::malformed, what);
    };

    switch (ix.variant_) {
        case Variant::base:
            check(ix.b_.size() == ix.s_.size(), "start bits do not cover the symbols");
            check(ix.m_ == 0 || ix.b_.ones() == ix.m_, "start bit count mismatch");
            break;
        case Variant::first_omitted:
            ix.c_ = BitVector::load(r);
            check(ix.b_.size() == ix.s_.size() + ix.m_, "start bits do not cover the symbols");
            check(ix.m_ == 0 || ix.b_.ones() == ix.m_, "start bit count mismatch");
            check(ix.c_.size() == ix.p_ + ix.m_ && ix.c_.ones() == ix.p_,
                  "first-phrase bit vector malformed");
            break;
        default: {
            ix.range_str_.resize(ix.t_ + 1);
            ix.range_sym_.resize(ix.t_ + 1);
            for (auto& x : ix.range_str_) x = r.get_u64();
            for (auto& x : ix.range_sym_) x = r.get_u64();
            for (uint32_t i = 0; i + 1 <= ix.t_; ++i) {
                check(ix.range_str_[i] <= ix.range_str_[i + 1], "string ranges not monotone");
                check(ix.range_sym_[i] <= ix.range_sym_[i + 1], "symbol ranges not monotone");
            }
            check(ix.range_str_[ix.t_] <= ix.m_, "string ranges exceed the set");
            check(ix.range_sym_[ix.t_] <= ix.s_.size(), "symbol ranges exceed the symbols");
            uint64_t tail_n = ix.m_ - ix.range_str_[ix.t_];
            check(ix.b_.size() == ix.s_.size() - ix.range_sym_[ix.t_],
                  "tail start bits do not cover the tail");
            check(tail_n == 0 || ix.b_.ones() == tail_n, "tail start bit count mismatch");
            ix.c_enabled_.assign(ix.t_, false);
            if (ix.variant_ == Variant::combined) {
                for (uint32_t i = 0; i < (ix.t_ + 7) / 8; ++i) {
                    uint8_t byte = r.get_u8();
                    for (uint32_t b = 0; b < 8 && i * 8 + b < ix.t_; ++b)
                        ix.c_enabled_[i * 8 + b] = (byte >> b) & 1;
                }
                for (uint32_t l = 1; l <= ix.t_; ++l) {
                    if (!ix.c_enabled_[l - 1]) continue;
                    BitVector c = BitVector::load(r);
                    uint64_t n_l = ix.range_str_[l] - ix.range_str_[l - 1];
                    check(c.size() == ix.p_ + n_l && c.ones() == ix.p_,
                          "per-range first-phrase bit vector malformed");
                    ix.c_ranges_.push_back(std::move(c));
                }
            }
            // Stride consistency across the head ranges.
            for (uint32_t l = 1; l <= ix.t_; ++l) {
                uint64_t n_l = ix.range_str_[l] - ix.range_str_[l - 1];
                uint64_t stride = ix.c_enabled_[l - 1] ? l - 1 : l;
                check(ix.range_sym_[l] - ix.range_sym_[l - 1] == n_l * stride,
                      "symbol range does not match its stride");
            }
            break;
        }
    }
    return ix;
}

uint64_t LinearizedIndex::size_bits() const {
    ByteWriter w;
    save(w);
    return static_cast<uint64_t>(w.size()) * 8;
}

LinearizedIndex::Breakdown LinearizedIndex::payload_breakdown() const {
    Breakdown bd;
    bd.symbol_bits = s_.bit_count();
    bd.start_bits = b_.size();
    bd.first_phrase_bits = c_.size();
    for (const auto& c : c_ranges_) bd.first_phrase_bits += c.size();
    if (variant_ == Variant::length_sorted || variant_ == Variant::combined) {
        bd.range_table_bits = 64 * (range_str_.size() + range_sym_.size());
        if (variant_ == Variant::combined) bd.range_table_bits += 8 * ((t_ + 7) / 8);
    }
    return bd;
}

}  // namespace lzdict
