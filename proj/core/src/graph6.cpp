#include "turan/graph6.hpp"

#include <fstream>

#include "turan/errors.hpp"

namespace turan {

namespace {

const std::string kGraph6Header = ">>graph6<<";
const std::string kSparse6Header = ">>sparse6<<";

void append_number(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 258047: '~' then 18 bits in three sixtets
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
}

int sixtet_at(const std::string& s, std::size_t i) {
    if (i >= s.size()) throw ParseError("truncated input", i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("byte out of graph6 range", i);
    return c - 63;
}

// Parses N(n), advancing pos.
int parse_number(const std::string& s, std::size_t& pos) {
    int first = sixtet_at(s, pos);
    if (first < 63) {
        ++pos;
        return first;
    }
    if (pos + 1 < s.size() && s[pos + 1] == '~')
        throw ParseError("graphs beyond 258047 vertices not supported", pos);
    int n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sixtet_at(s, pos + i);
    pos += 4;
    return n;
}

std::string strip_trailing_newline(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

class BitWriter {
public:
    void put(int bit) {
        cur_ = (cur_ << 1) | (bit & 1);
        if (++fill_ == 6) flush_group();
    }
    void put_value(unsigned long long v, int width) {
        for (int i = width - 1; i >= 0; --i) put(static_cast<int>((v >> i) & 1));
    }
    // Pads the last group with 1 bits.
    std::string finish() {
        while (fill_ != 0) put(1);
        return out_;
    }
    int pending_bits() const { return fill_; }

private:
    void flush_group() {
        out_.push_back(static_cast<char>(cur_ + 63));
        cur_ = 0;
        fill_ = 0;
    }
    std::string out_;
    int cur_ = 0, fill_ = 0;
};

class BitReader {
public:
    BitReader(const std::string& s, std::size_t pos) : s_(s), pos_(pos) {}
    // -1 once exhausted
    int get() {
        if (fill_ == 0) {
            if (pos_ >= s_.size()) return -1;
            cur_ = sixtet_at(s_, pos_);
            ++pos_;
            fill_ = 6;
        }
        --fill_;
        return (cur_ >> fill_) & 1;
    }
    long long get_value(int width) {
        long long v = 0;
        for (int i = 0; i < width; ++i) {
            int b = get();
            if (b < 0) return -1;
            v = (v << 1) | b;
        }
        return v;
    }
    std::size_t pos() const { return pos_; }

private:
    const std::string& s_;
    std::size_t pos_;
    int cur_ = 0, fill_ = 0;
};

int bits_for(int n) {  // bits needed to write n-1, at least 1
    int k = 1;
    while ((1 << k) < n) ++k;
    return k;
}

}  // namespace

std::string graph6_encode(const SmallGraph& g) {
    std::string out;
    append_number(out, g.n());
    BitWriter bw;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i) bw.put(g.has_edge(i, j) ? 1 : 0);
    // graph6 pads with zeros
    std::string body;
    {
        int total = g.n() * (g.n() - 1) / 2;
        int pad = (6 - total % 6) % 6;
        for (int i = 0; i < pad; ++i) bw.put(0);
        body = bw.finish();
    }
    return out + body;
}

SmallGraph graph6_decode(const std::string& raw) {
    std::string s = strip_trailing_newline(raw);
    std::size_t pos = 0;
    if (s.rfind(kGraph6Header, 0) == 0) pos = kGraph6Header.size();
    if (pos < s.size() && s[pos] == ':')
        throw ParseError("sparse6 input passed to graph6 decoder", pos);
    int n = parse_number(s, pos);
    if (n > kMaxVertices) throw CapacityExceeded("graph6 input has " + std::to_string(n) + " vertices");
    SmallGraph g(n);
    BitReader br(s, pos);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int b = br.get();
            if (b < 0) throw ParseError("graph6 body too short", s.size());
            if (b) g.add_edge(i, j);
        }
    if (br.pos() != s.size()) {
        // all body bytes must have been consumed (padding lives in the last one)
        std::size_t expect = pos + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
        if (s.size() > expect) throw ParseError("trailing bytes after graph6 body", expect);
    }
    g.validate();
    return g;
}

std::string sparse6_encode(const SmallGraph& g) {
    int n = g.n();
    std::string out = ":";
    append_number(out, n);
    int k = bits_for(n);
    BitWriter bw;
    int curv = 0;
    bool wrote = false;
    // edges sorted by (max endpoint, min endpoint)
    std::vector<Edge> es;
    for (auto [i, j] : g.edges()) es.emplace_back(j, i);  // (v, u) with v > u
    std::sort(es.begin(), es.end());
    for (auto [v, u] : es) {
        if (v == curv) {
            bw.put(0);
            bw.put_value(u, k);
        } else if (v == curv + 1) {
            ++curv;
            bw.put(1);
            bw.put_value(u, k);
        } else {
            curv = v;
            bw.put(1);
            bw.put_value(v, k);
            bw.put(0);
            bw.put_value(u, k);
        }
        wrote = true;
    }
    // Pad with 1s. When n is a power of two, an all-ones pad decodes as
    // (b=1, x=n-1); with the current vertex at n-2 that lands on a loop at
    // n-1, so lead with a single 0 bit in exactly that case.
    int pad = (6 - bw.pending_bits() % 6) % 6;
    if (k < 6 && n == (1 << k) && pad >= k + 1 && curv == n - 2) bw.put(0);
    (void)wrote;
    std::string body = bw.finish();
    if (bw.pending_bits() != 0) throw Error("internal: sparse6 padding");
    return out + body;
}

SmallGraph sparse6_decode(const std::string& raw) {
    std::string s = strip_trailing_newline(raw);
    std::size_t pos = 0;
    if (s.rfind(kSparse6Header, 0) == 0) pos = kSparse6Header.size();
    if (pos >= s.size() || s[pos] != ':') throw ParseError("sparse6 input must start with ':'", pos);
    ++pos;
    int n = parse_number(s, pos);
    if (n > kMaxVertices) throw CapacityExceeded("sparse6 input has " + std::to_string(n) + " vertices");
    SmallGraph g(n);
    int k = bits_for(n);
    BitReader br(s, pos);
    long long v = 0;
    while (true) {
        int b = br.get();
        if (b < 0) break;
        long long x = br.get_value(k);
        if (x < 0) break;
        if (b) ++v;
        if (x >= n || v >= n) break;
        if (x > v) {
            v = x;
        } else {
            if (x == v) throw ParseError("sparse6 loop edge", br.pos());
            g.add_edge(static_cast<int>(x), static_cast<int>(v));
        }
    }
    g.validate();
    return g;
}

SmallGraph decode_any(const std::string& raw) {
    std::string s = strip_trailing_newline(raw);
    if (!s.empty() && (s[0] == ':' || s.rfind(kSparse6Header, 0) == 0)) return sparse6_decode(s);
    return graph6_decode(s);
}

std::vector<SmallGraph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<SmallGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(decode_any(line));
    }
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<SmallGraph>& graphs) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    for (const auto& g : graphs) out << graph6_encode(g) << "\n";
}

}  // namespace turan
