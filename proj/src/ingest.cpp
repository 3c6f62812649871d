#include "netres/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace netres {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool is_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Numeric order for plain integer labels, plain string order otherwise.
bool label_less(const std::string& a, const std::string& b) {
    const bool da = is_digits(a);
    const bool db = is_digits(b);
    if (da && db) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
    if (da != db) return da;  // numeric labels sort before non-numeric
    return a < b;
}

}  // namespace

void LabelMap::add(const std::string& label) {
    if (label_to_id.emplace(label, NodeId(id_to_label.size())).second) {
        id_to_label.push_back(label);
    }
}

RawEdgeList parse_edge_list(std::istream& in) {
    RawEdgeList raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected 2 tokens, got " + std::to_string(tokens.size()));
        }
        raw.pairs.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
    }
    return raw;
}

RawEdgeList parse_pajek(std::istream& in) {
    RawEdgeList raw;
    enum class Section { None, Vertices, Links, Skip } section = Section::None;
    long long vertex_count = -1;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '%') continue;
        if (tokens.front().front() == '*') {
            const std::string keyword = to_lower(tokens.front());
            if (keyword == "*vertices") {
                if (tokens.size() < 2) {
                    throw ParseError(line_no, "*Vertices is missing a node count");
                }
                try {
                    vertex_count = std::stoll(tokens[1]);
                } catch (const std::exception&) {
                    throw ParseError(line_no, "bad node count '" + tokens[1] + "'");
                }
                if (vertex_count < 0) throw ParseError(line_no, "negative node count");
                section = Section::Vertices;
            } else if (keyword == "*edges" || keyword == "*arcs") {
                if (vertex_count < 0) {
                    throw ParseError(line_no, "edge section before any *Vertices header");
                }
                if (keyword == "*arcs") raw.directed = true;
                section = Section::Links;
            } else {
                section = Section::Skip;  // unsupported section (*Matrix, ...)
            }
            continue;
        }
        if (section == Section::Links) {
            if (tokens.size() < 2) {
                throw ParseError(line_no, "edge line needs two vertex ids");
            }
            for (int i = 0; i < 2; ++i) {
                long long id;
                try {
                    id = std::stoll(tokens[i]);
                } catch (const std::exception&) {
                    throw ParseError(line_no, "bad vertex id '" + tokens[i] + "'");
                }
                if (id < 1 || id > vertex_count) {
                    throw ParseError(line_no, "vertex id " + tokens[i] + " outside 1.." +
                                                  std::to_string(vertex_count));
                }
            }
            raw.pairs.emplace_back(tokens[0], tokens[1]);
        }
        // vertex definition lines and skipped sections are ignored
    }
    if (vertex_count < 0) {
        throw ParseError(line_no == 0 ? 1 : line_no, "no *Vertices header found");
    }
    raw.declared_nodes.reserve(std::size_t(vertex_count));
    for (long long i = 1; i <= vertex_count; ++i) {
        raw.declared_nodes.push_back(std::to_string(i));
    }
    return raw;
}

namespace {

struct GmlToken {
    enum class Kind { Open, Close, Value, End } kind = Kind::End;
    std::string text;
    std::size_t line = 0;
};

class GmlLexer {
public:
    explicit GmlLexer(std::istream& in) : in_(in) {}

    GmlToken next() {
        int c;
        while ((c = in_.get()) != EOF) {
            if (c == '\n') {
                ++line_;
                continue;
            }
            if (std::isspace(c)) continue;
            if (c == '[') return {GmlToken::Kind::Open, "[", line_};
            if (c == ']') return {GmlToken::Kind::Close, "]", line_};
            if (c == '"') {
                std::string text;
                while ((c = in_.get()) != EOF && c != '"') {
                    if (c == '\n') ++line_;
                    text.push_back(char(c));
                }
                if (c == EOF) throw ParseError(line_, "unterminated string");
                return {GmlToken::Kind::Value, std::move(text), line_};
            }
            std::string text(1, char(c));
            while ((c = in_.peek()) != EOF && !std::isspace(c) && c != '[' && c != ']') {
                text.push_back(char(in_.get()));
            }
            return {GmlToken::Kind::Value, std::move(text), line_};
        }
        return {GmlToken::Kind::End, "", line_};
    }

private:
    std::istream& in_;
    std::size_t line_ = 1;
};

// Scans a node/edge block body (after its '[') into flat key-value pairs;
// nested sub-blocks (graphics, ...) are traversed and dropped.
std::vector<std::pair<std::string, std::string>> scan_flat_block(GmlLexer& lexer,
                                                                 RawEdgeList& raw);

// Walks a key-value sequence, collecting node ids and edges. At top level
// the sequence ends at end-of-file, inside a block at the matching ']'.
void walk_gml_body(GmlLexer& lexer, RawEdgeList& raw, bool top_level) {
    for (;;) {
        GmlToken key = lexer.next();
        if (key.kind == GmlToken::Kind::End) {
            if (top_level) return;
            throw ParseError(key.line, "unexpected end of file inside a GML block");
        }
        if (key.kind == GmlToken::Kind::Close) {
            if (!top_level) return;
            throw ParseError(key.line, "unmatched ']'");
        }
        if (key.kind == GmlToken::Kind::Open) {
            walk_gml_body(lexer, raw, false);  // stray block without a key
            continue;
        }
        const std::string name = to_lower(key.text);
        GmlToken value = lexer.next();
        if (value.kind == GmlToken::Kind::Open) {
            if (name == "node") {
                std::string id;
                for (const auto& [k, v] : scan_flat_block(lexer, raw)) {
                    if (k == "id") id = v;
                }
                if (!id.empty()) raw.declared_nodes.push_back(id);
            } else if (name == "edge") {
                std::string source, target;
                for (const auto& [k, v] : scan_flat_block(lexer, raw)) {
                    if (k == "source") source = v;
                    if (k == "target") target = v;
                }
                if (source.empty() || target.empty()) {
                    throw ParseError(value.line, "edge block is missing source or target");
                }
                raw.pairs.emplace_back(std::move(source), std::move(target));
            } else {
                walk_gml_body(lexer, raw, false);  // graph, graphics, ...
            }
        } else if (value.kind == GmlToken::Kind::Value) {
            if (name == "directed" && value.text == "1") raw.directed = true;
        } else {
            throw ParseError(value.line, "key '" + key.text + "' has no value");
        }
    }
}

std::vector<std::pair<std::string, std::string>> scan_flat_block(GmlLexer& lexer,
                                                                 RawEdgeList& raw) {
    std::vector<std::pair<std::string, std::string>> entries;
    for (;;) {
        GmlToken k = lexer.next();
        if (k.kind == GmlToken::Kind::Close) return entries;
        if (k.kind == GmlToken::Kind::End) {
            throw ParseError(k.line, "unexpected end of file inside a GML block");
        }
        if (k.kind == GmlToken::Kind::Open) {
            walk_gml_body(lexer, raw, false);
            continue;
        }
        GmlToken v = lexer.next();
        if (v.kind == GmlToken::Kind::Open) {
            walk_gml_body(lexer, raw, false);
            continue;
        }
        if (v.kind != GmlToken::Kind::Value) {
            throw ParseError(v.line, "key '" + k.text + "' has no value");
        }
        entries.emplace_back(to_lower(k.text), v.text);
    }
}

}  // namespace

RawEdgeList parse_gml(std::istream& in) {
    RawEdgeList raw;
    GmlLexer lexer(in);
    walk_gml_body(lexer, raw, true);
    return raw;
}

IngestResult simplify_and_lcc(const RawEdgeList& raw) {
    LabelMap all;
    for (const auto& label : raw.declared_nodes) all.add(label);
    for (const auto& [a, b] : raw.pairs) {
        all.add(a);
        all.add(b);
    }
    if (all.id_to_label.empty()) {
        throw std::runtime_error("graph is empty after simplification");
    }

    Graph full(all.id_to_label.size());
    for (const auto& [a, b] : raw.pairs) {
        if (a == b) continue;  // self-loop
        full.add_edge(all.label_to_id.at(a), all.label_to_id.at(b));  // idempotent
    }

    const std::vector<NodeId> keep = full.largest_component();  // sorted ascending
    std::vector<NodeId> old_to_new(full.node_capacity(), NodeId(-1));
    LabelMap labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        old_to_new[keep[i]] = NodeId(i);
        labels.add(all.id_to_label[keep[i]]);
    }

    Graph lcc(keep.size());
    for (NodeId u : keep) {
        for (NodeId v : full.neighbors(u)) {
            if (u < v) lcc.add_edge(old_to_new[u], old_to_new[v]);
        }
    }
    return IngestResult{std::move(lcc), std::move(labels)};
}

void write_canonical(const Graph& g, const LabelMap* labels, std::ostream& out) {
    auto label_of = [&](NodeId u) {
        return labels ? labels->id_to_label.at(u) : std::to_string(u);
    };
    std::vector<std::pair<std::string, std::string>> lines;
    lines.reserve(g.active_edges());
    for (const EdgeKey& e : g.edges()) {
        std::string a = label_of(e.u);
        std::string b = label_of(e.v);
        if (label_less(b, a)) std::swap(a, b);
        lines.emplace_back(std::move(a), std::move(b));
    }
    std::sort(lines.begin(), lines.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return label_less(x.first, y.first);
        return label_less(x.second, y.second);
    });
    out << "# nodes=" << g.active_nodes() << " edges=" << g.active_edges() << "\n";
    for (const auto& [a, b] : lines) {
        out << a << ' ' << b << "\n";
    }
}

FileFormat detect_format(const std::filesystem::path& path) {
    const std::string ext = to_lower(path.extension().string());
    if (ext == ".net" || ext == ".paj") return FileFormat::Pajek;
    if (ext == ".gml") return FileFormat::Gml;
    return FileFormat::EdgeList;
}

RawEdgeList parse_file(const std::filesystem::path& path, FileFormat format) {
    if (format == FileFormat::Auto) format = detect_format(path);
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "'");
    }
    switch (format) {
        case FileFormat::Pajek:
            return parse_pajek(in);
        case FileFormat::Gml:
            return parse_gml(in);
        default:
            return parse_edge_list(in);
    }
}

IngestResult load_graph(const std::filesystem::path& path, FileFormat format) {
    return simplify_and_lcc(parse_file(path, format));
}

}  // namespace netres
