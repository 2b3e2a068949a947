#include "lzdict/dictionary.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace lzdict {

namespace {

constexpr char kMagic[4] = {'L', 'Z', 'D', '1'};
constexpr uint16_t kVersion = 1;
// magic + version + mode + variant + 3 x (offset, length) + crc32
constexpr size_t kHeaderSize = 4 + 2 + 1 + 1 + 3 * 16 + 4;

uint32_t payload_crc(const uint8_t* data, size_t size) {
    uLong crc = crc32(0L, Z_NULL, 0);
    while (size > 0) {
        uInt chunk = static_cast<uInt>(std::min<size_t>(size, 1u << 30));
        crc = crc32(crc, reinterpret_cast<const Bytef*>(data), chunk);
        data += chunk;
        size -= chunk;
    }
    return static_cast<uint32_t>(crc);
}

uint32_t default_bucket(Mode mode) { return mode == Mode::lzt_fc ? 16 : 8; }

}  // namespace

LzDictionary::BuildResult LzDictionary::build(const InputSet& input, const BuildConfig& config) {
    SanitizedInput si = sanitize_input(input.strings);
    if (si.set.size() == 0) throw std::invalid_argument("cannot build an empty dictionary");
    uint32_t bucket = config.bucket_size ? config.bucket_size : default_bucket(config.mode);

    BuildResult out;
    out.duplicates_removed = si.duplicates_removed;
    out.dict.mode_ = config.mode;
    out.dict.original_bytes_ = si.set.original_bytes();

    if (config.mode == Mode::lzt_fc) {
        InitialParse first = initial_parse(si.set);
        seed_alphabet(first.trie, si.set);
        ReparseResult second = reparse(first.trie, si.set);
        out.stats = build_stats(first, second);
        out.dict.fc_ = FcStore::build(second.phrases, bucket);
        auto built = LinearizedIndex::build(second.parsings, second.phrases.size(), config.variant,
                                            config.length_threshold);
        out.dict.index_ = std::move(built.index);
        out.permutation = std::move(built.permutation);
    } else {
        std::vector<std::string> sorted = si.set.strings;
        std::sort(sorted.begin(), sorted.end());
        out.dict.fc_ = FcStore::build(sorted, bucket);
        out.permutation.resize(si.set.size());
        std::vector<uint64_t> order(si.set.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](uint64_t a, uint64_t b) { return si.set.strings[a] < si.set.strings[b]; });
        for (uint64_t rank = 0; rank < order.size(); ++rank) out.permutation[order[rank]] = rank;
    }
    return out;
}

std::string LzDictionary::access(uint64_t id) const {
    if (mode_ == Mode::fc_baseline) return fc_.access(id);
    std::vector<uint32_t> parse = index_.access(id);
    std::string out;
    for (uint32_t pid : parse) out += fc_.access(pid);
    return out;
}

int64_t LzDictionary::lookup(std::string_view s) const {
    if (s.empty()) return -1;
    if (mode_ == Mode::fc_baseline) {
        auto rank = fc_.find(s);
        return rank ? static_cast<int64_t>(*rank) : -1;
    }
    std::vector<uint32_t> parse;
    size_t pos = 0;
    while (pos < s.size()) {
        auto hit = fc_.longest_prefix(s.substr(pos));
        if (!hit) return -1;
        parse.push_back(static_cast<uint32_t>(hit->rank));
        pos += hit->len;
    }
    return index_.lookup(parse);
}

SpaceReport LzDictionary::space_report() const {
    SpaceReport r;
    r.original_bytes = original_bytes_;
    r.fc_bits = fc_.size_bits();
    r.index_bits = mode_ == Mode::lzt_fc ? index_.size_bits() : 0;
    return r;
}

std::vector<uint8_t> LzDictionary::serialize() const {
    ByteWriter fc_w;
    fc_.save(fc_w);
    ByteWriter ix_w;
    if (mode_ == Mode::lzt_fc) index_.save(ix_w);
    ByteWriter meta_w;
    meta_w.put_u64(original_bytes_);

    ByteWriter w;
    w.put_bytes(kMagic, sizeof(kMagic));
    w.put_u16(kVersion);
    w.put_u8(static_cast<uint8_t>(mode_));
    w.put_u8(mode_ == Mode::lzt_fc ? static_cast<uint8_t>(index_.variant()) : 0);

    const ByteWriter* sections[3] = {&fc_w, &ix_w, &meta_w};
    size_t table_at = w.size();
    for (int i = 0; i < 3; ++i) {
        w.put_u64(0);  // offset, patched below
        w.put_u64(sections[i]->size());
    }
    size_t crc_at = w.size();
    w.put_u32(0);

    uint64_t off = kHeaderSize;
    for (int i = 0; i < 3; ++i) {
        w.patch_u64(table_at + 16 * i, off);
        w.put_bytes(sections[i]->data(), sections[i]->size());
        off += sections[i]->size();
    }
    std::vector<uint8_t> bytes = w.take();
    uint32_t crc = payload_crc(bytes.data() + kHeaderSize, bytes.size() - kHeaderSize);
    bytes[crc_at + 0] = static_cast<uint8_t>(crc);
    bytes[crc_at + 1] = static_cast<uint8_t>(crc >> 8);
    bytes[crc_at + 2] = static_cast<uint8_t>(crc >> 16);
    bytes[crc_at + 3] = static_cast<uint8_t>(crc >> 24);
    return bytes;
}

LzDictionary LzDictionary::deserialize(const uint8_t* data, size_t size) {
    if (size < sizeof(kMagic)) throw LoadError(LoadError::Kind::truncated, "no room for the magic");
    if (std::memcmp(data, kMagic, sizeof(kMagic)) != 0)
        throw LoadError(LoadError::Kind::bad_magic, "not a dictionary file");
    ByteReader header(data, size);
    header.get_bytes(sizeof(kMagic));
    uint16_t version = header.get_u16();
    if (version != kVersion)
        throw LoadError(LoadError::Kind::bad_version,
                        "unsupported format version " + std::to_string(version));
    uint8_t mode_byte = header.get_u8();
    if (mode_byte > static_cast<uint8_t>(Mode::fc_baseline))
        throw LoadError(LoadError::Kind::malformed, "unknown mode " + std::to_string(mode_byte));
    uint8_t variant_byte = header.get_u8();
    if (variant_byte > static_cast<uint8_t>(Variant::combined))
        throw LoadError(LoadError::Kind::malformed,
                        "unknown index variant " + std::to_string(variant_byte));
    if (mode_byte == static_cast<uint8_t>(Mode::fc_baseline) && variant_byte != 0)
        throw LoadError(LoadError::Kind::malformed, "variant byte must be zero in baseline mode");

    uint64_t offs[3], lens[3];
    for (int i = 0; i < 3; ++i) {
        offs[i] = header.get_u64();
        lens[i] = header.get_u64();
    }
    uint32_t stored_crc = header.get_u32();

    uint64_t expect = kHeaderSize;
    for (int i = 0; i < 3; ++i) {
        if (offs[i] != expect)
            throw LoadError(LoadError::Kind::malformed, "section table offsets out of order");
        if (lens[i] > size || offs[i] > size - lens[i])
            throw LoadError(LoadError::Kind::truncated, "section extends past the file end");
        expect = offs[i] + lens[i];
    }
    if (expect != size)
        throw LoadError(LoadError::Kind::malformed, "trailing bytes after the last section");

    if (payload_crc(data + kHeaderSize, size - kHeaderSize) != stored_crc)
        throw LoadError(LoadError::Kind::bad_checksum, "payload checksum mismatch");

    LzDictionary dict;
    dict.mode_ = static_cast<Mode>(mode_byte);

    ByteReader fc_r(data + offs[0], lens[0]);
    dict.fc_ = FcStore::load(fc_r);
    if (fc_r.remaining())
        throw LoadError(LoadError::Kind::malformed, "trailing bytes in the string section");

    if (dict.mode_ == Mode::lzt_fc) {
        ByteReader ix_r(data + offs[1], lens[1]);
        dict.index_ = LinearizedIndex::load(ix_r);
        if (ix_r.remaining())
            throw LoadError(LoadError::Kind::malformed, "trailing bytes in the index section");
        if (static_cast<uint8_t>(dict.index_.variant()) != variant_byte)
            throw LoadError(LoadError::Kind::malformed, "index variant disagrees with the header");
        if (dict.index_.phrase_count() != dict.fc_.size())
            throw LoadError(LoadError::Kind::malformed,
                            "index phrase count disagrees with the stored phrases");
    } else if (lens[1] != 0) {
        throw LoadError(LoadError::Kind::malformed, "unexpected index section");
    }

    ByteReader meta_r(data + offs[2], lens[2]);
    dict.original_bytes_ = meta_r.get_u64();
    if (meta_r.remaining())
        throw LoadError(LoadError::Kind::malformed, "trailing bytes in the metadata section");
    return dict;
}

void LzDictionary::save_file(const std::string& path) const { write_file(path, serialize()); }

LzDictionary LzDictionary::load_file(const std::string& path) {
    std::vector<uint8_t> bytes = read_file(path);
    return deserialize(bytes.data(), bytes.size());
}

void write_permutation_file(const std::string& path, const std::vector<uint64_t>& perm) {
    ByteWriter w;
    w.put_u64(perm.size());
    for (uint64_t v : perm) w.put_u64(v);
    write_file(path, w.take());
}

std::vector<uint64_t> read_permutation_file(const std::string& path) {
    std::vector<uint8_t> bytes = read_file(path);
    ByteReader r(bytes);
    uint64_t n = r.get_u64();
    if (r.remaining() % 8 != 0 || r.remaining() / 8 != n)
        throw LoadError(LoadError::Kind::malformed, "permutation entry count disagrees");
    std::vector<uint64_t> perm(n);
    for (auto& v : perm) v = r.get_u64();
    return perm;
}

}  // namespace lzdict
