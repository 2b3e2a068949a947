#include "lzdict/fc_store.hpp"

#include <algorithm>
#include <stdexcept>

namespace lzdict {

namespace {

void append_uvarint(std::string& out, uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>(static_cast<uint8_t>(v) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(static_cast<uint8_t>(v)));
}

uint64_t read_uvarint(const std::string& s, size_t& pos) {
    uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
        if (pos >= s.size())
            throw LoadError(LoadError::Kind::malformed, "front coding tail cut short");
        uint8_t b = static_cast<uint8_t>(s[pos++]);
        v |= static_cast<uint64_t>(b & 0x7F) << shift;
        if (!(b & 0x80)) return v;
    }
    throw LoadError(LoadError::Kind::malformed, "front coding length does not terminate");
}

size_t common_prefix(std::string_view a, std::string_view b, size_t from = 0) {
    size_t n = std::min(a.size(), b.size());
    size_t i = from;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

}  // namespace

FcStore FcStore::build(const std::vector<std::string>& sorted, uint32_t bucket_size) {
    if (bucket_size == 0) throw std::invalid_argument("bucket size must be positive");
    FcStore fc;
    fc.k_ = bucket_size;
    fc.n_ = sorted.size();

    std::vector<uint64_t> hoffs, toffs;
    for (uint64_t i = 0; i < fc.n_; ++i) {
        const std::string& s = sorted[i];
        if (s.empty()) throw std::invalid_argument("empty strings cannot be stored");
        if (i > 0 && !(sorted[i - 1] < s))
            throw std::invalid_argument("input to front coding must be strictly sorted (index " +
                                        std::to_string(i) + ")");
        if (i % bucket_size == 0) {
            hoffs.push_back(fc.headers_.size());
            toffs.push_back(fc.tails_.size());
            fc.headers_ += s;
        } else {
            size_t lcp = common_prefix(sorted[i - 1], s);
            append_uvarint(fc.tails_, lcp);
            append_uvarint(fc.tails_, s.size() - lcp);
            fc.tails_.append(s, lcp, std::string::npos);
        }
    }
    hoffs.push_back(fc.headers_.size());
    toffs.push_back(fc.tails_.size());

    uint8_t hw = PackedInts::bits_for(fc.headers_.size());
    uint8_t tw = PackedInts::bits_for(fc.tails_.size());
    fc.header_off_ = PackedInts(hw, hoffs.size());
    fc.tail_off_ = PackedInts(tw, toffs.size());
    for (size_t i = 0; i < hoffs.size(); ++i) fc.header_off_.set(i, hoffs[i]);
    for (size_t i = 0; i < toffs.size(); ++i) fc.tail_off_.set(i, toffs[i]);
    return fc;
}

std::string_view FcStore::header(uint64_t b) const {
    uint64_t lo = header_off_.get(b);
    uint64_t hi = header_off_.get(b + 1);
    return std::string_view(headers_).substr(lo, hi - lo);
}

FcStore::Cursor FcStore::cursor(uint64_t bucket) const {
    return Cursor{this, bucket, bucket * k_, std::string(header(bucket)), tail_off_.get(bucket), 0};
}

bool FcStore::Cursor::advance() {
    uint64_t next = index + 1;
    if (next >= fc->n_ || next % fc->k_ == 0) return false;
    size_t pos = tail_pos;
    uint64_t lcp = read_uvarint(fc->tails_, pos);
    uint64_t slen = read_uvarint(fc->tails_, pos);
    if (lcp > cur.size() || slen > fc->tails_.size() - pos)
        throw LoadError(LoadError::Kind::malformed, "front coding entry out of bounds");
    cur.resize(lcp);
    cur.append(fc->tails_, pos, slen);
    tail_pos = pos + slen;
    index = next;
    last_lcp = lcp;
    return true;
}

std::string FcStore::access(uint64_t rank) const {
    if (rank >= n_) throw std::out_of_range("FcStore::access: rank " + std::to_string(rank));
    Cursor c = cursor(rank / k_);
    for (uint64_t i = rank % k_; i > 0; --i) c.advance();
    return std::move(c.cur);
}

std::optional<uint64_t> FcStore::header_bucket(std::string_view q) const {
    uint64_t buckets = bucket_count();
    if (buckets == 0 || header(0) > q) return std::nullopt;
    uint64_t lo = 0, hi = buckets - 1;
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo + 1) / 2;
        if (header(mid) <= q) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

FcStore::Scan FcStore::scan_bucket(uint64_t b, std::string_view tq) const {
    Scan res;
    Cursor c = cursor(b);
    size_t lq = common_prefix(c.cur, tq);
    for (;;) {
        if (lq == c.cur.size()) {
            // cur is a prefix of tq (possibly tq itself).
            if (!res.best || c.cur.size() > res.best->len)
                res.best = PrefixHit{c.index, static_cast<uint32_t>(c.cur.size())};
            if (c.cur.size() == tq.size()) res.exact = c.index;
            res.pred = c.index;
        } else if (lq == tq.size() || static_cast<uint8_t>(c.cur[lq]) > static_cast<uint8_t>(tq[lq])) {
            break;  // cur > tq; everything after is larger still
        } else {
            res.pred = c.index;
        }
        if (!c.advance()) break;
        if (c.last_lcp <= lq) lq = common_prefix(c.cur, tq, c.last_lcp);
        // else: cur repeats the byte where the previous string diverged from
        // tq, so the comparison state is unchanged.
    }
    return res;
}

std::optional<FcStore::PrefixHit> FcStore::longest_prefix(std::string_view q, uint32_t* passes) const {
    if (passes) *passes = 0;
    std::optional<PrefixHit> best;
    if (n_ == 0 || q.empty()) return best;

    size_t r_limit = q.size();
    for (;;) {
        std::string_view tq = q.substr(0, r_limit);
        auto b = header_bucket(tq);
        if (passes) ++*passes;
        if (!b) break;
        Scan sc = scan_bucket(*b, tq);
        if (sc.best && (!best || sc.best->len > best->len)) best = sc.best;
        if (*b == 0) break;
        // Candidates not yet seen sort before this bucket's header, which
        // makes them prefixes of it; they fit in a strictly shorter prefix
        // of q, so retry there or stop.
        size_t r_hb = common_prefix(header(*b), tq);
        size_t new_r = std::min(r_hb, r_limit - 1);
        if (new_r == 0 || (best && best->len >= new_r)) break;
        r_limit = new_r;
    }
    return best;
}

std::optional<uint64_t> FcStore::predecessor(std::string_view q) const {
    if (n_ == 0) return std::nullopt;
    auto b = header_bucket(q);
    if (!b) return std::nullopt;
    return scan_bucket(*b, q).pred;
}

std::optional<uint64_t> FcStore::find(std::string_view q) const {
    if (n_ == 0 || q.empty()) return std::nullopt;
    auto b = header_bucket(q);
    if (!b) return std::nullopt;
    return scan_bucket(*b, q).exact;
}

void FcStore::save(ByteWriter& w) const {
    w.put_u32(k_);
    w.put_u64(n_);
    header_off_.save(w);
    tail_off_.save(w);
    w.put_bytes(headers_.data(), headers_.size());
    w.put_bytes(tails_.data(), tails_.size());
}

FcStore FcStore::load(ByteReader& r) {
    FcStore fc;
    fc.k_ = r.get_u32();
    fc.n_ = r.get_u64();
    if (fc.k_ == 0) throw LoadError(LoadError::Kind::malformed, "front coding bucket size 0");
    uint64_t buckets = (fc.n_ + fc.k_ - 1) / fc.k_;
    fc.header_off_ = PackedInts::load(r);
    fc.tail_off_ = PackedInts::load(r);
    // build() always appends the end sentinel, so the tables hold buckets + 1
    // offsets even when the store is empty.
    if (fc.header_off_.size() != buckets + 1 || fc.tail_off_.size() != fc.header_off_.size())
        throw LoadError(LoadError::Kind::malformed, "front coding offset table size mismatch");
    uint64_t hbytes = fc.header_off_.get(buckets);
    uint64_t tbytes = fc.tail_off_.get(buckets);
    const uint8_t* h = r.get_bytes(hbytes);
    fc.headers_.assign(reinterpret_cast<const char*>(h), hbytes);
    const uint8_t* t = r.get_bytes(tbytes);
    fc.tails_.assign(reinterpret_cast<const char*>(t), tbytes);
    return fc;
}

uint64_t FcStore::size_bits() const {
    ByteWriter w;
    save(w);
    return static_cast<uint64_t>(w.size()) * 8;
}

}  // namespace lzdict
