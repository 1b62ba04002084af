#include "sphcox/input.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "sphcox/errors.hpp"

namespace sphcox {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Cuts an unquoted '#' and everything after it.
std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '"') in_string = !in_string;
        else if (c == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

int bracket_balance(const std::string& s) {
    bool in_string = false;
    int bal = 0;
    for (char c : s) {
        if (c == '"') in_string = !in_string;
        else if (!in_string && c == '[') ++bal;
        else if (!in_string && c == ']') --bal;
    }
    return bal;
}

class ValueParser {
  public:
    ValueParser(const std::string& text, int line) : text_(text), line_(line) {}

    TomlValue parse_full() {
        TomlValue v = parse_value();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing characters after value");
        return v;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("line " + std::to_string(line_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    TomlValue parse_value() {
        skip_ws();
        char c = peek();
        if (c == '\0') fail("missing value");
        if (c == '[') return parse_array();
        if (c == '"') return parse_string();
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_integer();
        return parse_keyword();
    }

    TomlValue parse_array() {
        ++pos_;  // '['
        TomlValue v;
        v.kind = TomlValue::Kind::Array;
        skip_ws();
        if (peek() == ']') { ++pos_; return v; }
        while (true) {
            v.array.push_back(parse_value());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                skip_ws();
                if (peek() == ']') { ++pos_; break; }  // trailing comma
                continue;
            }
            if (peek() == ']') { ++pos_; break; }
            fail("expected ',' or ']' in array");
        }
        return v;
    }

    TomlValue parse_string() {
        ++pos_;  // '"'
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') out.push_back(text_[pos_++]);
        if (pos_ == text_.size()) fail("unterminated string");
        ++pos_;
        TomlValue v;
        v.kind = TomlValue::Kind::String;
        v.str = out;
        return v;
    }

    TomlValue parse_integer() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed integer");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        TomlValue v;
        v.kind = TomlValue::Kind::Integer;
        v.integer = Int(text_.substr(start, pos_ - start));
        return v;
    }

    TomlValue parse_keyword() {
        std::size_t start = pos_;
        while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        std::string word = text_.substr(start, pos_ - start);
        TomlValue v;
        v.kind = TomlValue::Kind::Boolean;
        if (word == "true") v.boolean = true;
        else if (word == "false") v.boolean = false;
        else fail("unrecognized value '" + word + "'");
        return v;
    }
};

bool valid_key(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') return false;
    return true;
}

} // namespace

TomlDoc parse_toml(const std::string& text) {
    TomlDoc doc;
    doc[""].emplace_back();
    TomlTable* current = &doc[""].back();
    std::string current_path;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            bool array_table = line.size() >= 2 && line[1] == '[';
            std::string inner = array_table ? line.substr(2) : line.substr(1);
            std::string closer = array_table ? "]]" : "]";
            std::size_t end = inner.find(closer);
            if (end == std::string::npos || trim(inner.substr(end + closer.size())) != "")
                throw InputError("line " + std::to_string(lineno) + ": malformed table header");
            std::string path = trim(inner.substr(0, end));
            if (!valid_key(path))
                throw InputError("line " + std::to_string(lineno) + ": bad table name '" + path + "'");
            if (!array_table && doc.count(path) && !doc[path].empty())
                throw InputError("line " + std::to_string(lineno) + ": table [" + path +
                                 "] defined twice");
            doc[path].emplace_back();
            current = &doc[path].back();
            current_path = path;
            continue;
        }

        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        if (!valid_key(key) || key.find('.') != std::string::npos)
            throw InputError("line " + std::to_string(lineno) + ": bad key '" + key + "'");
        std::string value_text = trim(line.substr(eq + 1));
        int first_line = lineno;
        // A multiline array keeps the value open until brackets balance.
        int bal = bracket_balance(value_text);
        while (bal > 0 && std::getline(in, raw)) {
            ++lineno;
            std::string more = trim(strip_comment(raw));
            value_text += " " + more;
            bal = bracket_balance(value_text);
        }
        if (bal != 0)
            throw InputError("line " + std::to_string(first_line) + ": unbalanced brackets in value");
        if (current->count(key))
            throw InputError("line " + std::to_string(first_line) + ": duplicate key '" + key +
                             "' in [" + current_path + "]");
        (*current)[key] = ValueParser(value_text, first_line).parse_full();
    }
    return doc;
}

namespace {

const TomlTable* find_single(const TomlDoc& doc, const std::string& path) {
    auto it = doc.find(path);
    if (it == doc.end() || it->second.empty()) return nullptr;
    if (it->second.size() > 1)
        throw InputError("[" + path + "] may appear only once");
    return &it->second.front();
}

const TomlValue& require(const TomlTable& t, const std::string& section, const std::string& key) {
    auto it = t.find(key);
    if (it == t.end())
        throw InputError("[" + section + "] is missing key '" + key + "'");
    return it->second;
}

const TomlValue* lookup(const TomlTable& t, const std::string& key) {
    auto it = t.find(key);
    return it == t.end() ? nullptr : &it->second;
}

int to_small_int(const TomlValue& v, const std::string& what) {
    if (v.kind != TomlValue::Kind::Integer)
        throw InputError(what + " must be an integer");
    if (!v.integer.fits_sint_p())
        throw InputError(what + " is out of range");
    return static_cast<int>(v.integer.get_si());
}

bool to_bool(const TomlValue& v, const std::string& what) {
    if (v.kind != TomlValue::Kind::Boolean)
        throw InputError(what + " must be true or false");
    return v.boolean;
}

std::string to_string_value(const TomlValue& v, const std::string& what) {
    if (v.kind != TomlValue::Kind::String)
        throw InputError(what + " must be a string");
    return v.str;
}

std::vector<int> to_int_list(const TomlValue& v, const std::string& what) {
    if (v.kind != TomlValue::Kind::Array)
        throw InputError(what + " must be an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.array.size(); ++i)
        out.push_back(to_small_int(v.array[i], what + "[" + std::to_string(i) + "]"));
    return out;
}

Vec to_vec(const TomlValue& v, const std::string& what) {
    if (v.kind != TomlValue::Kind::Array)
        throw InputError(what + " must be an array of integers");
    Vec out;
    for (std::size_t i = 0; i < v.array.size(); ++i) {
        const TomlValue& e = v.array[i];
        if (e.kind != TomlValue::Kind::Integer)
            throw InputError(what + "[" + std::to_string(i) + "] must be an integer");
        out.push_back(e.integer);
    }
    return out;
}

Mat to_mat(const TomlValue& v, const std::string& what) {
    if (v.kind != TomlValue::Kind::Array)
        throw InputError(what + " must be an array of integer vectors");
    Mat out;
    for (std::size_t i = 0; i < v.array.size(); ++i)
        out.push_back(to_vec(v.array[i], what + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::string> to_string_list(const TomlValue& v, const std::string& what) {
    if (v.kind != TomlValue::Kind::Array)
        throw InputError(what + " must be an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.array.size(); ++i)
        out.push_back(to_string_value(v.array[i], what + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace

Problem load_problem_text(const std::string& text) {
    TomlDoc doc = parse_toml(text);

    for (const auto& [path, tables] : doc) {
        if (path == "") {
            for (const auto& t : tables)
                if (!t.empty())
                    throw InputError("top-level keys are not allowed; use [space] etc.");
            continue;
        }
        if (path != "space" && path != "space.relations" && path != "embedding" &&
            path != "bold" && path != "wonderful")
            throw InputError("unknown section [" + path + "]");
    }

    const TomlTable* space = find_single(doc, "space");
    if (!space) throw InputError("missing required section [space]");
    int r = to_small_int(require(*space, "space", "r"), "space.r");
    std::vector<int> dims = to_int_list(require(*space, "space", "dims"), "space.dims");
    int m = to_small_int(require(*space, "space", "m"), "space.m");
    bool h_connected = true;
    if (const TomlValue* hc = lookup(*space, "h_connected"))
        h_connected = to_bool(*hc, "space.h_connected");
    for (const auto& [key, value] : *space) {
        (void)value;
        if (key != "r" && key != "dims" && key != "m" && key != "h_connected")
            throw InputError("[space] has unknown key '" + key + "'");
    }

    std::vector<std::string> relation_strings;
    if (auto it = doc.find("space.relations"); it != doc.end())
        for (const TomlTable& t : it->second)
            relation_strings.push_back(
                to_string_value(require(t, "space.relations", "poly"), "space.relations.poly"));

    Problem p;
    p.datum = make_spherical_datum(r, dims, m, h_connected, relation_strings);

    if (const TomlTable* emb = find_single(doc, "embedding")) {
        p.embedding_given = true;
        Mat rays = to_mat(require(*emb, "embedding", "rays"), "embedding.rays");
        p.rays.assign(rays.begin(), rays.end());
        validate_rays(p.datum, p.rays);
    }

    if (const TomlTable* bold = find_single(doc, "bold")) {
        Mat d_matrix = to_mat(require(*bold, "bold", "d_matrix"), "bold.d_matrix");
        int xc_rank = to_small_int(require(*bold, "bold", "xc_rank"), "bold.xc_rank");
        Mat mu_restriction = to_mat(require(*bold, "bold", "mu_restriction"), "bold.mu_restriction");
        int rbar = static_cast<int>(d_matrix.size());
        int mbar = rbar > 0 ? static_cast<int>(d_matrix.front().size())
                            : (mu_restriction.empty() ? 0
                                                      : static_cast<int>(mu_restriction.front().size()));
        p.bold = make_bold_datum(rbar, mbar, xc_rank, d_matrix, mu_restriction);
        if (const TomlValue* br = lookup(*bold, "bold_rays")) {
            p.bold_rays_given = true;
            Mat rays = to_mat(*br, "bold.bold_rays");
            p.bold_rays.assign(rays.begin(), rays.end());
            validate_bold_rays(*p.bold, p.bold_rays);
        }
    }

    if (const TomlTable* wonder = find_single(doc, "wonderful")) {
        std::vector<std::string> vars = to_string_list(require(*wonder, "wonderful", "vars"),
                                                       "wonderful.vars");
        std::vector<std::string> z_sections =
            to_string_list(require(*wonder, "wonderful", "z_sections"), "wonderful.z_sections");
        Mat roots_m = to_mat(require(*wonder, "wonderful", "roots"), "wonderful.roots");
        std::vector<Vec> roots(roots_m.begin(), roots_m.end());
        std::vector<std::string> relations;
        if (const TomlValue* rel = lookup(*wonder, "relations"))
            relations = to_string_list(*rel, "wonderful.relations");
        p.wonderful = make_wonderful(vars, z_sections, std::move(roots), relations,
                                     p.datum.weight_rank());
    }

    return p;
}

Problem load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_problem_text(buf.str());
}

} // namespace sphcox
