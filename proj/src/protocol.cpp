// protocol.cpp

#include "qotto/protocol.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qotto {

namespace {

void require_level_index(const char* fn, int idx, int levels) {
    if (idx < 0 || idx >= levels) {
        throw std::invalid_argument(std::string(fn) + ": level index " +
                                    std::to_string(idx) + " outside [0, " +
                                    std::to_string(levels) + ")");
    }
}

void require_dim(const char* fn, int d) {
    if (d < 1) {
        throw std::invalid_argument(std::string(fn) + ": d must be >= 1");
    }
}

}  // namespace

Transposition::Transposition(int a_, int b_) : a(a_), b(b_) {
    if (a == b) {
        throw std::invalid_argument("Transposition: endpoints must differ");
    }
    if (a > b) std::swap(a, b);
}

SwapProtocol SwapProtocol::identity(int d) {
    require_dim("SwapProtocol::identity", d);
    SwapProtocol p;
    p.d = d;
    p.kind = ProtocolKind::TranspositionSet;
    return p;
}

SwapProtocol SwapProtocol::transposition_set(int d, std::vector<Transposition> swaps) {
    require_dim("SwapProtocol::transposition_set", d);
    const int levels = 4 * d;
    std::vector<char> used(levels, 0);
    for (const auto& t : swaps) {
        require_level_index("SwapProtocol::transposition_set", t.a, levels);
        require_level_index("SwapProtocol::transposition_set", t.b, levels);
        if (used[t.a] || used[t.b]) {
            throw std::invalid_argument(
                "SwapProtocol::transposition_set: transpositions must be disjoint");
        }
        used[t.a] = used[t.b] = 1;
    }
    std::sort(swaps.begin(), swaps.end(),
              [](const Transposition& x, const Transposition& y) { return x.a < y.a; });
    SwapProtocol p;
    p.d = d;
    p.kind = ProtocolKind::TranspositionSet;
    p.swaps = std::move(swaps);
    return p;
}

SwapProtocol SwapProtocol::permutation(int d, std::vector<int> image) {
    require_dim("SwapProtocol::permutation", d);
    const int levels = 4 * d;
    if (static_cast<int>(image.size()) != levels) {
        throw std::invalid_argument("SwapProtocol::permutation: image must have 4d entries");
    }
    std::vector<char> hit(levels, 0);
    for (int v : image) {
        require_level_index("SwapProtocol::permutation", v, levels);
        if (hit[v]) {
            throw std::invalid_argument("SwapProtocol::permutation: image is not a bijection");
        }
        hit[v] = 1;
    }
    SwapProtocol p;
    p.d = d;
    p.kind = ProtocolKind::Permutation;
    p.image = std::move(image);
    return p;
}

bool SwapProtocol::is_identity() const {
    if (kind == ProtocolKind::TranspositionSet) return swaps.empty();
    for (int l = 0; l < static_cast<int>(image.size()); ++l) {
        if (image[l] != l) return false;
    }
    return true;
}

bool canonical_less(const SwapProtocol& lhs, const SwapProtocol& rhs) {
    if (lhs.d != rhs.d) return lhs.d < rhs.d;
    if (lhs.kind != rhs.kind) {
        return lhs.kind == ProtocolKind::TranspositionSet;
    }
    if (lhs.kind == ProtocolKind::TranspositionSet) {
        const size_t n = std::min(lhs.swaps.size(), rhs.swaps.size());
        for (size_t i = 0; i < n; ++i) {
            if (lhs.swaps[i].a != rhs.swaps[i].a) return lhs.swaps[i].a < rhs.swaps[i].a;
            if (lhs.swaps[i].b != rhs.swaps[i].b) return lhs.swaps[i].b < rhs.swaps[i].b;
        }
        return lhs.swaps.size() < rhs.swaps.size();
    }
    return lhs.image < rhs.image;
}

OrientedSwap orient(const Transposition& t, const CompositeState& reference) {
    const double ea = reference.energy_h(t.a) + reference.energy_c(t.a);
    const double eb = reference.energy_h(t.b) + reference.energy_c(t.b);
    OrientedSwap o;
    if (ea > eb) {
        o.up = t.a;
        o.down = t.b;
    } else if (eb > ea) {
        o.up = t.b;
        o.down = t.a;
    } else {
        const double ha = reference.energy_h(t.a);
        const double hb = reference.energy_h(t.b);
        if (ha > hb) {
            o.up = t.a;
            o.down = t.b;
        } else if (hb > ha) {
            o.up = t.b;
            o.down = t.a;
        } else {
            o.up = t.a;  // canonical a < b
            o.down = t.b;
        }
    }
    return o;
}

bool is_internal(const Transposition& t, int d) {
    return t.a % d == t.b % d;
}

ValidationReport validate_protocol(const SwapProtocol& proto) {
    ValidationReport report;
    const int levels = 4 * proto.d;
    if (proto.d < 1) {
        report.violations.push_back("d must be >= 1");
        return report;
    }
    if (proto.kind == ProtocolKind::TranspositionSet) {
        std::vector<int> count(levels, 0);
        for (const auto& t : proto.swaps) {
            if (t.a < 0 || t.a >= levels || t.b < 0 || t.b >= levels) {
                report.violations.push_back("swap index outside [0, 4d)");
                continue;
            }
            if (t.a == t.b) {
                report.violations.push_back("swap endpoints coincide");
                continue;
            }
            ++count[t.a];
            ++count[t.b];
            if (is_internal(t, proto.d)) {
                ++report.internal_swaps;
            } else {
                ++report.external_swaps;
            }
        }
        for (int l = 0; l < levels; ++l) {
            if (count[l] > 1) {
                report.violations.push_back("level " + std::to_string(l) +
                                            " appears in more than one swap");
            }
        }
    } else {
        if (static_cast<int>(proto.image.size()) != levels) {
            report.violations.push_back("image must have 4d entries");
            return report;
        }
        std::vector<int> hit(levels, 0);
        for (int v : proto.image) {
            if (v < 0 || v >= levels) {
                report.violations.push_back("image entry outside [0, 4d)");
            } else {
                ++hit[v];
            }
        }
        for (int l = 0; l < levels; ++l) {
            if (hit[l] > 1) {
                report.violations.push_back("image repeats level " + std::to_string(l));
            }
        }
        if (report.ok()) {
            // Census over the cycle decomposition: a cycle is internal when it
            // never changes the catalyst index, and contributes its length - 1
            // transpositions.
            std::vector<char> seen(levels, 0);
            for (int start = 0; start < levels; ++start) {
                if (seen[start] || proto.image[start] == start) continue;
                bool internal = true;
                int len = 0;
                int l = start;
                while (!seen[l]) {
                    seen[l] = 1;
                    ++len;
                    if (proto.image[l] % proto.d != l % proto.d) internal = false;
                    l = proto.image[l];
                }
                if (internal) {
                    report.internal_swaps += len - 1;
                } else {
                    report.external_swaps += len - 1;
                }
            }
        }
    }
    return report;
}

CompositeState apply_protocol(const CompositeState& state, const SwapProtocol& proto) {
    if (proto.d != state.d) {
        throw std::invalid_argument("apply_protocol: protocol and state dimension differ");
    }
    auto report = validate_protocol(proto);
    if (!report.ok()) {
        throw std::invalid_argument("apply_protocol: invalid protocol: " +
                                    report.violations.front());
    }
    CompositeState out = state;
    if (proto.kind == ProtocolKind::TranspositionSet) {
        for (const auto& t : proto.swaps) {
            std::swap(out.probs[t.a], out.probs[t.b]);
        }
    } else {
        for (int l = 0; l < state.levels(); ++l) {
            out.probs[proto.image[l]] = state.probs[l];
        }
    }
    return out;
}

SwapProtocol d_otto_protocol(int d) {
    require_dim("d_otto_protocol", d);
    auto flat = [d](int i, int j, int k) { return (2 * i + j) * d + k; };
    std::vector<Transposition> swaps;
    swaps.reserve(d);
    for (int k = 1; k < d; ++k) {
        swaps.emplace_back(flat(1, 0, k), flat(0, 0, k - 1));
    }
    swaps.emplace_back(flat(1, 0, 0), flat(0, 1, d - 1));
    return SwapProtocol::transposition_set(d, std::move(swaps));
}

bool enumeration_within_cap(int d, EnumerationMode mode) {
    const int levels = 4 * d;
    return mode == EnumerationMode::Transpositions ? levels <= 16 : levels <= 8;
}

int enumerate_partition_count(int d, EnumerationMode mode) {
    require_dim("enumerate_partition_count", d);
    const int levels = 4 * d;
    if (mode == EnumerationMode::Transpositions) {
        return levels * (levels - 1) / 2;  // one partition per lex-first swap
    }
    return levels;  // one partition per image of level 0
}

namespace {

// Extends a partial matching whose lex-greatest swap starts at `min_a`,
// emitting every (still canonical) superset. `used` marks occupied levels.
void extend_matching(int d, int levels, int min_a, std::vector<Transposition>& acc,
                     std::vector<char>& used,
                     const std::function<void(const SwapProtocol&)>& visit) {
    {
        SwapProtocol p;
        p.d = d;
        p.kind = ProtocolKind::TranspositionSet;
        p.swaps = acc;
        visit(p);
    }
    for (int a = min_a; a < levels; ++a) {
        if (used[a]) continue;
        used[a] = 1;
        for (int b = a + 1; b < levels; ++b) {
            if (used[b]) continue;
            used[b] = 1;
            acc.emplace_back(a, b);
            extend_matching(d, levels, a + 1, acc, used, visit);
            acc.pop_back();
            used[b] = 0;
        }
        used[a] = 0;
    }
}

void enumerate_transposition_partition(int d, int partition,
                                       const std::function<void(const SwapProtocol&)>& visit) {
    const int levels = 4 * d;
    // Decode partition index into the lex-order first swap (a, b).
    int a = 0;
    int remaining = partition;
    while (remaining >= levels - 1 - a) {
        remaining -= levels - 1 - a;
        ++a;
    }
    const int b = a + 1 + remaining;
    std::vector<char> used(levels, 0);
    used[a] = used[b] = 1;
    std::vector<Transposition> acc;
    acc.emplace_back(a, b);
    extend_matching(d, levels, a + 1, acc, used, visit);
}

void enumerate_permutation_partition(int d, int partition,
                                     const std::function<void(const SwapProtocol&)>& visit) {
    const int levels = 4 * d;
    // All permutations with image[0] == partition, in lex order of the rest.
    std::vector<int> rest;
    rest.reserve(levels - 1);
    for (int l = 0; l < levels; ++l) {
        if (l != partition) rest.push_back(l);
    }
    std::vector<int> image(levels);
    image[0] = partition;
    do {
        std::copy(rest.begin(), rest.end(), image.begin() + 1);
        bool ident = image[0] == 0;
        for (int l = 1; ident && l < levels; ++l) ident = image[l] == l;
        if (ident) continue;
        SwapProtocol p;
        p.d = d;
        p.kind = ProtocolKind::Permutation;
        p.image = image;
        visit(p);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

void enumerate_partition(int d, EnumerationMode mode, int partition,
                         const std::function<void(const SwapProtocol&)>& visit) {
    require_dim("enumerate_partition", d);
    if (partition < 0 || partition >= enumerate_partition_count(d, mode)) {
        throw std::invalid_argument("enumerate_partition: partition index out of range");
    }
    if (mode == EnumerationMode::Transpositions) {
        enumerate_transposition_partition(d, partition, visit);
    } else {
        enumerate_permutation_partition(d, partition, visit);
    }
}

void enumerate_protocols(int d, EnumerationMode mode,
                         const std::function<void(const SwapProtocol&)>& visit,
                         bool override_cap) {
    require_dim("enumerate_protocols", d);
    if (!enumeration_within_cap(d, mode) && !override_cap) {
        throw std::invalid_argument(
            "enumerate_protocols: 4d exceeds the enumeration cap; pass override_cap to force");
    }
    const int parts = enumerate_partition_count(d, mode);
    for (int p = 0; p < parts; ++p) {
        enumerate_partition(d, mode, p, visit);
    }
}

std::string protocol_to_text(const SwapProtocol& proto) {
    std::ostringstream os;
    if (proto.kind == ProtocolKind::TranspositionSet) {
        for (const auto& t : proto.swaps) {
            CompositeState ref;
            ref.d = proto.d;
            const auto la = ref.decode(t.a);
            const auto lb = ref.decode(t.b);
            os << la.hot << ' ' << la.cold << ' ' << la.cat << ' ' << lb.hot << ' '
               << lb.cold << ' ' << lb.cat << '\n';
        }
    } else {
        os << "perm:";
        for (int v : proto.image) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

SwapProtocol parse_protocol_text(const std::string& text, int d) {
    require_dim("parse_protocol_text", d);
    std::istringstream is(text);
    std::string line;
    std::vector<Transposition> swaps;
    std::vector<int> image;
    bool saw_perm = false;
    int lineno = 0;
    CompositeState ref;
    ref.d = d;
    while (std::getline(is, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::string body = line.substr(first);
        if (body.rfind("perm:", 0) == 0) {
            if (saw_perm || !swaps.empty()) {
                throw std::invalid_argument(
                    "parse_protocol_text: line " + std::to_string(lineno) +
                    ": perm line cannot be combined with other protocol lines");
            }
            saw_perm = true;
            std::istringstream ls(body.substr(5));
            int v;
            while (ls >> v) image.push_back(v);
            if (!ls.eof()) {
                throw std::invalid_argument("parse_protocol_text: line " +
                                            std::to_string(lineno) +
                                            ": malformed permutation entry");
            }
            continue;
        }
        if (saw_perm) {
            throw std::invalid_argument(
                "parse_protocol_text: line " + std::to_string(lineno) +
                ": swap line after a perm line");
        }
        std::istringstream ls(body);
        int i, j, k, ip, jp, kp;
        if (!(ls >> i >> j >> k >> ip >> jp >> kp)) {
            throw std::invalid_argument("parse_protocol_text: line " +
                                        std::to_string(lineno) +
                                        ": expected six integers i j k i' j' k'");
        }
        std::string trailing;
        if (ls >> trailing && trailing[0] != '#') {
            throw std::invalid_argument("parse_protocol_text: line " +
                                        std::to_string(lineno) + ": trailing tokens");
        }
        auto check_qubit = [&](int v, const char* name) {
            if (v != 0 && v != 1) {
                throw std::invalid_argument("parse_protocol_text: line " +
                                            std::to_string(lineno) + ": " + name +
                                            " must be 0 or 1");
            }
        };
        auto check_cat = [&](int v) {
            if (v < 0 || v >= d) {
                throw std::invalid_argument("parse_protocol_text: line " +
                                            std::to_string(lineno) +
                                            ": catalyst index outside [0, d)");
            }
        };
        check_qubit(i, "i");
        check_qubit(j, "j");
        check_cat(k);
        check_qubit(ip, "i'");
        check_qubit(jp, "j'");
        check_cat(kp);
        swaps.emplace_back(ref.flat_index(i, j, k), ref.flat_index(ip, jp, kp));
    }
    if (saw_perm) {
        return SwapProtocol::permutation(d, std::move(image));
    }
    return SwapProtocol::transposition_set(d, std::move(swaps));
}

SwapProtocol load_protocol_file(const std::string& path, int d) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("load_protocol_file: cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_protocol_text(buf.str(), d);
}

}  // namespace qotto
