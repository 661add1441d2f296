#include "slocc/io.hpp"

#include "slocc/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace slocc {

namespace {

// Byte offset of the value at a JSON pointer such as /entries/0/1/1, found
// by walking the raw text; npos when the text cannot be followed.
class Locator {
public:
    explicit Locator(const std::string& t) : t_(t) {}

    size_t find(const std::vector<std::string>& path)
    {
        p_ = 0;
        for (const auto& step : path) {
            ws();
            if (p_ >= t_.size())
                return std::string::npos;
            if (t_[p_] == '{') {
                if (!enter_object(step))
                    return std::string::npos;
            } else if (t_[p_] == '[') {
                if (!enter_array(std::stoul(step)))
                    return std::string::npos;
            } else {
                return std::string::npos;
            }
        }
        ws();
        return p_;
    }

private:
    const std::string& t_;
    size_t p_ = 0;

    void ws()
    {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_])))
            ++p_;
    }

    std::string string_token()
    {
        std::string s;
        ++p_;
        while (p_ < t_.size() && t_[p_] != '"') {
            if (t_[p_] == '\\')
                ++p_;
            if (p_ < t_.size())
                s += t_[p_++];
        }
        ++p_;
        return s;
    }

    void skip_value()
    {
        ws();
        if (p_ >= t_.size())
            return;
        char c = t_[p_];
        if (c == '"') {
            string_token();
        } else if (c == '{' || c == '[') {
            int depth = 0;
            while (p_ < t_.size()) {
                char d = t_[p_];
                if (d == '"') {
                    string_token();
                    continue;
                }
                if (d == '{' || d == '[')
                    ++depth;
                if (d == '}' || d == ']')
                    --depth;
                ++p_;
                if (depth == 0)
                    break;
            }
        } else {
            while (p_ < t_.size() && t_[p_] != ',' && t_[p_] != '}' && t_[p_] != ']')
                ++p_;
        }
    }

    bool enter_object(const std::string& key)
    {
        ++p_;
        for (;;) {
            ws();
            if (p_ >= t_.size() || t_[p_] != '"')
                return false;
            std::string k = string_token();
            ws();
            if (p_ >= t_.size() || t_[p_] != ':')
                return false;
            ++p_;
            if (k == key)
                return true;
            skip_value();
            ws();
            if (p_ >= t_.size() || t_[p_] != ',')
                return false;
            ++p_;
        }
    }

    bool enter_array(size_t index)
    {
        ++p_;
        for (size_t k = 0; k < index; ++k) {
            skip_value();
            ws();
            if (p_ >= t_.size() || t_[p_] != ',')
                return false;
            ++p_;
        }
        return true;
    }
};

std::string line_col(const std::string& text, size_t offset)
{
    size_t line = 1, col = 1;
    for (size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// reading context: reports errors with the pointer path and text position
struct Reader {
    const std::string& text;
    std::string origin;
    Json doc;

    Reader(const std::string& t, std::string o) : text(t), origin(std::move(o))
    {
        try {
            doc = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(origin + ": " + line_col(text, e.byte ? e.byte - 1 : 0) + ": malformed JSON");
        }
    }

    [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& what) const
    {
        std::string ptr;
        for (auto& s : path)
            ptr += "/" + s;
        size_t off = Locator(text).find(path);
        std::string where = off == std::string::npos ? "" : " (" + line_col(text, off) + ")";
        throw ParseError(origin + ": " + (ptr.empty() ? "/" : ptr) + where + ": " + what);
    }

    const Json& at(const Json& obj, const std::vector<std::string>& path, const std::string& key) const
    {
        if (!obj.is_object())
            fail(path, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end())
            fail(path, "missing member \"" + key + "\"");
        return *it;
    }

    size_t count(const Json& v, const std::vector<std::string>& path) const
    {
        if (!v.is_number_unsigned())
            fail(path, "expected a non-negative integer");
        return v.get<size_t>();
    }

    const Json& array(const Json& v, const std::vector<std::string>& path, size_t len) const
    {
        if (!v.is_array())
            fail(path, "expected an array");
        if (len != SIZE_MAX && v.size() != len)
            fail(path, "expected " + std::to_string(len) + " elements, found " + std::to_string(v.size()));
        return v;
    }

    Scalar scalar(const Json& v, const std::vector<std::string>& path) const
    {
        try {
            if (v.is_string())
                return Scalar::parse(v.get<std::string>());
            if (v.is_number_integer())
                return Scalar(v.get<long>());
            if (v.is_object()) {
                auto part = [&](const char* key) {
                    auto it = v.find(key);
                    if (it == v.end())
                        return mpq_class(0);
                    if (it->is_number_integer())
                        return mpq_class(it->get<long>());
                    if (!it->is_string())
                        fail(path, std::string("\"") + key + "\" must be a rational string");
                    return parse_rational(it->get<std::string>());
                };
                for (auto& [k, x] : v.items())
                    if (k != "re" && k != "im")
                        fail(path, "unexpected member \"" + k + "\" in complex literal");
                return Scalar(part("re"), part("im"));
            }
        } catch (const ParseError& e) {
            fail(path, e.what());
        }
        fail(path, "expected an exact scalar literal (floating point numbers are not accepted)");
    }
};

std::vector<std::string> with(std::vector<std::string> path, const std::string& step)
{
    path.push_back(step);
    return path;
}

std::vector<std::string> with(std::vector<std::string> path, size_t index)
{
    path.push_back(std::to_string(index));
    return path;
}

} // namespace

Json scalar_json(const Scalar& s)
{
    return s.str();
}

FileKind detect_kind(const std::string& text, const std::string& origin)
{
    Reader r(text, origin);
    if (r.doc.is_object() && r.doc.contains("format"))
        return FileKind::Canon;
    return FileKind::State;
}

TensorState read_state(const std::string& text, const std::string& origin)
{
    Reader r(text, origin);
    const Json& d = r.doc;
    size_t l = r.count(r.at(d, {}, "L"), {"L"});
    size_t n = r.count(r.at(d, {}, "N"), {"N"});
    if (l == 0)
        r.fail({"L"}, "L must be positive");
    if (n == 0)
        r.fail({"N"}, "N must be positive");
    const Json& e = r.array(r.at(d, {}, "entries"), {"entries"}, l);
    std::vector<Matrix> g;
    for (size_t i = 0; i < l; ++i) {
        auto pi = with({"entries"}, i);
        const Json& slot = r.array(e[i], pi, n);
        Matrix m(n, n);
        for (size_t a = 0; a < n; ++a) {
            auto pa = with(pi, a);
            const Json& row = r.array(slot[a], pa, n);
            for (size_t b = 0; b < n; ++b)
                m(a, b) = r.scalar(row[b], with(pa, b));
        }
        g.push_back(std::move(m));
    }
    return TensorState(std::move(g));
}

std::string write_state(const TensorState& psi)
{
    Json e = Json::array();
    for (auto& m : psi.gammas) {
        Json slot = Json::array();
        for (size_t a = 0; a < m.rows(); ++a) {
            Json row = Json::array();
            for (size_t b = 0; b < m.cols(); ++b)
                row.push_back(scalar_json(m(a, b)));
            slot.push_back(row);
        }
        e.push_back(slot);
    }
    Json d;
    d["L"] = psi.L;
    d["N"] = psi.N;
    d["entries"] = e;
    return d.dump(2) + "\n";
}

CanonicalForm read_canon(const std::string& text, const std::string& origin)
{
    Reader r(text, origin);
    const Json& d = r.doc;
    const Json& fmt = r.at(d, {}, "format");
    if (!fmt.is_string() || fmt.get<std::string>() != "slocc-canon/1")
        r.fail({"format"}, "unsupported format, expected \"slocc-canon/1\"");
    size_t n = r.count(r.at(d, {}, "N"), {"N"});
    const Json& blocks = r.array(r.at(d, {}, "blocks"), {"blocks"}, SIZE_MAX);
    if (blocks.empty())
        r.fail({"blocks"}, "no blocks");
    std::vector<RunData> pieces;
    size_t total = 0;
    for (size_t k = 0; k < blocks.size(); ++k) {
        auto pk = with({"blocks"}, k);
        const Json& b = blocks[k];
        Scalar lam = r.scalar(r.at(b, pk, "lambda"), with(pk, "lambda"));
        if (b.contains("grid")) {
            const Json& sz = r.array(r.at(b, pk, "sizes"), with(pk, "sizes"), SIZE_MAX);
            std::vector<size_t> sizes;
            for (size_t s = 0; s < sz.size(); ++s) {
                sizes.push_back(r.count(sz[s], with(with(pk, "sizes"), s)));
                if (sizes.back() == 0)
                    r.fail(with(with(pk, "sizes"), s), "block size must be positive");
                total += sizes.back();
            }
            auto pg = with(pk, "grid");
            const Json& g = r.array(b.at("grid"), pg, sizes.size());
            PolyGrid grid(sizes.size(), std::vector<TruncPoly>(sizes.size()));
            for (size_t a = 0; a < sizes.size(); ++a) {
                const Json& row = r.array(g[a], with(pg, a), sizes.size());
                for (size_t c = 0; c < sizes.size(); ++c) {
                    auto pe = with(with(pg, a), c);
                    const Json& coeffs = r.array(row[c], pe, sizes[c]);
                    TruncPoly f(sizes[c]);
                    for (size_t i = 0; i < sizes[c]; ++i)
                        f[i] = r.scalar(coeffs[i], with(pe, i));
                    grid[a][c] = f;
                }
            }
            try {
                poly_matrix_to_commutant(grid, sizes);
            } catch (const PatternViolation& e) {
                r.fail(pg, e.what());
            }
            pieces.push_back({lam, sizes, grid});
        } else {
            size_t size = r.count(r.at(b, pk, "size"), with(pk, "size"));
            if (size == 0)
                r.fail(with(pk, "size"), "block size must be positive");
            auto pc = with(pk, "coeffs");
            const Json& coeffs = r.array(r.at(b, pk, "coeffs"), pc, size);
            TruncPoly f(size);
            for (size_t i = 0; i < size; ++i)
                f[i] = r.scalar(coeffs[i], with(pc, i));
            pieces.push_back({lam, {size}, {{f}}});
            total += size;
        }
    }
    if (total != n)
        r.fail({"N"}, "block sizes sum to " + std::to_string(total) + ", not N = " + std::to_string(n));
    return normalize_runs(std::move(pieces));
}

Json canon_json(const CanonicalForm& cf0)
{
    CanonicalForm cf = normalize_runs(cf0.run_data());
    Json blocks = Json::array();
    for (auto& run : cf.run_data()) {
        size_t b = run.sizes.size();
        bool coupled = false;
        for (size_t k = 0; k < b; ++k)
            for (size_t l = 0; l < b; ++l)
                coupled = coupled || (k != l && !run.grid[k][l].is_zero());
        auto coeffs = [](const TruncPoly& f) {
            Json a = Json::array();
            for (auto& c : f.coeffs())
                a.push_back(scalar_json(c));
            return a;
        };
        if (!coupled) {
            for (size_t k = 0; k < b; ++k) {
                Json e;
                e["lambda"] = scalar_json(run.lambda);
                e["size"] = run.sizes[k];
                e["coeffs"] = coeffs(run.grid[k][k]);
                blocks.push_back(e);
            }
            continue;
        }
        Json e;
        e["lambda"] = scalar_json(run.lambda);
        e["sizes"] = run.sizes;
        Json g = Json::array();
        for (size_t k = 0; k < b; ++k) {
            Json row = Json::array();
            for (size_t l = 0; l < b; ++l)
                row.push_back(coeffs(run.grid[k][l]));
            g.push_back(row);
        }
        e["grid"] = g;
        blocks.push_back(e);
    }
    Json d;
    d["format"] = "slocc-canon/1";
    d["N"] = cf.dim();
    d["blocks"] = blocks;
    return d;
}

std::string write_canon(const CanonicalForm& cf)
{
    // one block per line
    Json d = canon_json(cf);
    std::string s = "{\n  \"format\": " + d["format"].dump() + ",\n  \"N\": " + d["N"].dump() + ",\n  \"blocks\": [\n";
    auto& blocks = d["blocks"];
    for (size_t k = 0; k < blocks.size(); ++k)
        s += "    " + blocks[k].dump() + (k + 1 < blocks.size() ? ",\n" : "\n");
    return s + "  ]\n}\n";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace slocc
