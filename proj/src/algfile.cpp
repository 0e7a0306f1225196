#include "jjalg/algfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace jjalg {

const char* species_name(Species s) {
    switch (s) {
        case Species::jj: return "jj";
        case Species::prejj_left: return "prejj-left";
        case Species::prejj_right: return "prejj-right";
        case Species::plain: return "plain";
    }
    return "?";
}

Scalar LinExpr::eval(const std::vector<Scalar>& values) const {
    Scalar acc = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * values[i];
    return acc;
}

LinearMap FamilySpec::instantiate(const std::vector<Scalar>& values) const {
    if (values.size() != params.size())
        throw dimension_error("family: wrong number of parameter values");
    Field f = entries.empty() ? Field::rationals() : entries[0].constant.field();
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = entries[r * cols + c].eval(values);
    return LinearMap(std::move(m));
}

const FDAlgebra& AlgebraFile::alg() const {
    if (!algebra) throw error("file holds no algebra");
    return *algebra;
}

Representation AlgebraFile::representation() const {
    if (!has_representation) throw precondition_error("file has no [representation] section");
    if (species != Species::jj)
        throw precondition_error("representation() requires species jj");
    return Representation(alg(), rep_dim, rho);
}

BiRepresentation AlgebraFile::birepresentation() const {
    if (!has_representation) throw precondition_error("file has no [representation] section");
    if (species != Species::prejj_left && species != Species::prejj_right)
        throw precondition_error("birepresentation() requires a prejj species");
    return BiRepresentation(alg(), rep_dim, rho, mu);
}

bool AlgebraFile::operator==(const AlgebraFile& o) const {
    auto opt_eq = [](const auto& a, const auto& b) {
        if (a.has_value() != b.has_value()) return false;
        return !a.has_value() || *a == *b;
    };
    return name == o.name && species == o.species && opt_eq(algebra, o.algebra) &&
           has_representation == o.has_representation && rep_dim == o.rep_dim && rho == o.rho &&
           mu == o.mu && opt_eq(op_t, o.op_t) && opt_eq(map_n, o.map_n) &&
           opt_eq(map_z, o.map_z) && opt_eq(element_x, o.element_x) && name2 == o.name2 &&
           species2 == o.species2 && opt_eq(algebra2, o.algebra2) && rho1 == o.rho1 &&
           mu1 == o.mu1 && rho2 == o.rho2 && mu2 == o.mu2 && opt_eq(family, o.family);
}

namespace {

struct Line {
    std::string text;
    int number;
};

struct Cursor {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line, static_cast<int>(pos) + 1);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-' || peek() == '+') neg = s[pos++] == '-';
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }
    std::string ident() {
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            fail("expected an identifier");
        std::string out;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
               peek() == '-' || peek() == '\'')
            out += s[pos++];
        return out;
    }
};

// [sign] [number[/number]] ['*'] [symbol]; at least one of number/symbol.
struct Term {
    Scalar coeff;
    std::string symbol;  // empty = constant term
};

Term parse_term(Cursor& c, Field field, bool first) {
    c.skip_ws();
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') {
        neg = c.s[c.pos] == '-';
        ++c.pos;
    } else if (!first) {
        c.fail("expected '+' or '-' between terms");
    }
    c.skip_ws();
    Scalar coeff = Scalar::one(field);
    bool have_num = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        long num = c.integer();
        long den = 1;
        if (c.peek() == '/') {
            ++c.pos;
            den = c.integer();
            if (den == 0) c.fail("zero denominator");
        }
        coeff = field.is_rational() ? Scalar::fraction(num, den)
                                    : Scalar::fraction(num, den).to_field(field);
        have_num = true;
        c.eat('*');
    }
    std::string symbol;
    c.skip_ws();
    if (std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_')
        symbol = c.ident();
    if (!have_num && symbol.empty()) c.fail("expected a coefficient or a symbol");
    if (neg) coeff = -coeff;
    return Term{coeff, symbol};
}

std::vector<Term> parse_terms(Cursor& c, Field field) {
    std::vector<Term> out;
    out.push_back(parse_term(c, field, true));
    while (!c.done()) out.push_back(parse_term(c, field, false));
    return out;
}

std::size_t basis_index(const std::string& sym, std::size_t dim, Cursor& c) {
    if (sym.size() < 2 || sym[0] != 'e') c.fail("expected a basis symbol e<k>: '" + sym + "'");
    std::size_t k = 0;
    for (std::size_t i = 1; i < sym.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(sym[i])))
            c.fail("expected a basis symbol e<k>: '" + sym + "'");
        k = k * 10 + (sym[i] - '0');
    }
    if (k < 1 || k > dim) c.fail("basis index out of range: '" + sym + "'");
    return k - 1;
}

Vec parse_lincomb(const std::string& text, int line, Field field, std::size_t dim) {
    Cursor c{text, line};
    Vec v(field, dim);
    c.skip_ws();
    if (c.peek() == '0') {
        std::size_t save = c.pos;
        ++c.pos;
        if (c.done()) return v;
        c.pos = save;
    }
    for (const Term& t : parse_terms(c, field)) {
        if (t.symbol.empty()) c.fail("a linear combination needs basis symbols");
        v[basis_index(t.symbol, dim, c)] += t.coeff;
    }
    return v;
}

std::vector<Scalar> parse_row(const std::string& text, int line, Field field, std::size_t cols) {
    Cursor c{text, line};
    std::vector<Scalar> out;
    while (!c.done()) {
        bool neg = false;
        c.skip_ws();
        if (c.peek() == '-') {
            neg = true;
            ++c.pos;
        }
        long num = c.integer();
        long den = 1;
        if (c.peek() == '/') {
            ++c.pos;
            den = c.integer();
            if (den == 0) c.fail("zero denominator");
        }
        Scalar s = field.is_rational() ? Scalar::fraction(num, den)
                                       : Scalar::fraction(num, den).to_field(field);
        out.push_back(neg ? -s : s);
    }
    if (out.size() != cols)
        throw parse_error("expected " + std::to_string(cols) + " entries, found " +
                              std::to_string(out.size()),
                          line, 1);
    return out;
}

LinExpr parse_linexpr(Cursor& c, Field field, const std::vector<std::string>& params) {
    LinExpr e{Scalar::zero(field), std::vector<Scalar>(params.size(), Scalar::zero(field))};
    c.skip_ws();
    if (c.peek() == '0') {
        std::size_t save = c.pos;
        ++c.pos;
        c.skip_ws();
        if (c.pos >= c.s.size() || std::isspace(static_cast<unsigned char>(c.s[c.pos])) ||
            c.peek() == '\0' || c.peek() == '-' || c.peek() == '+' ||
            std::isdigit(static_cast<unsigned char>(c.peek())) ||
            std::isalpha(static_cast<unsigned char>(c.peek()))) {
            // plain zero only when nothing follows within this entry
        }
        c.pos = save;
    }
    Term t = parse_term(c, field, true);
    bool more = true;
    while (more) {
        if (t.symbol.empty()) {
            e.constant += t.coeff;
        } else {
            std::size_t k = 0;
            while (k < params.size() && params[k] != t.symbol) ++k;
            if (k == params.size()) c.fail("unknown parameter '" + t.symbol + "'");
            e.coeffs[k] += t.coeff;
        }
        c.skip_ws();
        if (c.peek() == '+' || c.peek() == '-')
            t = parse_term(c, field, false);
        else
            more = false;
    }
    return e;
}

// family rows: whitespace-separated entries, but entries may contain
// internal '+'/'-' only when written without spaces (e.g. "b+2y").
std::vector<LinExpr> parse_family_row(const std::string& text, int line, Field field,
                                      const std::vector<std::string>& params, std::size_t cols) {
    std::vector<LinExpr> out;
    std::istringstream iss(text);
    std::string tok;
    while (iss >> tok) {
        Cursor c{tok, line};
        out.push_back(parse_linexpr(c, field, params));
        if (!c.done()) c.fail("trailing characters in family entry '" + tok + "'");
    }
    if (out.size() != cols)
        throw parse_error("expected " + std::to_string(cols) + " family entries, found " +
                              std::to_string(out.size()),
                          line, 1);
    return out;
}

Species parse_species(const std::string& s, int line) {
    if (s == "jj") return Species::jj;
    if (s == "prejj-left") return Species::prejj_left;
    if (s == "prejj-right") return Species::prejj_right;
    if (s == "plain") return Species::plain;
    throw parse_error("unknown species '" + s + "'", line, 1);
}

Field parse_field(const std::string& s, int line) {
    if (s == "Q") return Field::rationals();
    if (s.size() >= 2 && s[0] == 'F') {
        std::uint32_t p = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw parse_error("bad field '" + s + "'", line, 1);
            p = p * 10 + (s[i] - '0');
        }
        return Field::prime(p);
    }
    throw parse_error("bad field '" + s + "' (use Q or F<p>)", line, 1);
}

struct ProductEntry {
    std::size_t i, j;
    Vec value;
};

struct AlgebraBlock {
    std::string name;
    Species species = Species::plain;
    std::optional<std::size_t> dim;
    std::vector<ProductEntry> products;
    std::vector<std::vector<bool>> seen;

    FDAlgebra build(Field field, bool allow_small_char, int line) const {
        if (!dim) throw parse_error("missing 'dim'", line, 1);
        Tensor c(field, {*dim, *dim, *dim});
        for (const ProductEntry& p : products)
            for (std::size_t k = 0; k < *dim; ++k) c.at({p.i, p.j, k}) = p.value[k];
        return FDAlgebra(field, *dim, std::move(c), {}, allow_small_char);
    }
};

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text, const ParseOptions& opt) {
    // split into logical lines: strip comments first, then newline and ';'
    // both separate
    std::vector<Line> lines;
    {
        int n = 1;
        std::string cur;
        auto push = [&]() {
            std::size_t b = cur.find_first_not_of(" \t\r");
            if (b != std::string::npos) {
                std::size_t e = cur.find_last_not_of(" \t\r");
                lines.push_back(Line{cur.substr(b, e - b + 1), n});
            }
            cur.clear();
        };
        bool in_comment = false;
        for (char ch : text) {
            if (ch == '\n') {
                push();
                in_comment = false;
                ++n;
            } else if (in_comment) {
                continue;
            } else if (ch == '#') {
                in_comment = true;
            } else if (ch == ';') {
                push();
            } else {
                cur += ch;
            }
        }
        push();
    }

    AlgebraFile out;
    std::optional<Field> field;
    AlgebraBlock main_block, second_block;
    bool rep_regular = false;

    enum class Section {
        header, algebra2, representation, op_t, map_n, map_z, element,
        action_rho1, action_mu1, action_rho2, action_mu2, family
    };
    Section section = Section::header;

    // deferred matrix-block collection: raw rows per section
    std::vector<std::pair<std::string, std::vector<Line>>> rep_blocks;  // "rho e1" -> rows
    std::vector<Line> op_rows, n_rows, z_rows, family_rows;
    std::vector<std::pair<std::string, std::vector<Line>>> action_blocks[4];
    std::optional<std::size_t> rep_dim_decl;
    std::vector<std::string> family_params;
    std::optional<Vec> element;
    int element_line = 0;

    auto cur_actions = [&](Section s) -> std::vector<std::pair<std::string, std::vector<Line>>>& {
        switch (s) {
            case Section::action_rho1: return action_blocks[0];
            case Section::action_mu1: return action_blocks[1];
            case Section::action_rho2: return action_blocks[2];
            default: return action_blocks[3];
        }
    };

    for (const Line& ln : lines) {
        const std::string& s = ln.text;
        if (s.front() == '[') {
            if (s == "[representation]") section = Section::representation;
            else if (s == "[operator T]") section = Section::op_t;
            else if (s == "[map N]") section = Section::map_n;
            else if (s == "[map Z]") section = Section::map_z;
            else if (s == "[element x]") section = Section::element;
            else if (s == "[algebra2]") section = Section::algebra2;
            else if (s == "[action rho1]") section = Section::action_rho1;
            else if (s == "[action mu1]") section = Section::action_mu1;
            else if (s == "[action rho2]") section = Section::action_rho2;
            else if (s == "[action mu2]") section = Section::action_mu2;
            else if (s == "[operator family]") section = Section::family;
            else throw parse_error("unknown section " + s, ln.number, 1);
            continue;
        }

        Cursor c{s, ln.number};
        switch (section) {
            case Section::header:
            case Section::algebra2: {
                AlgebraBlock& blk = section == Section::header ? main_block : second_block;
                std::size_t save = c.pos;
                std::string word = c.ident();
                if (word == "name") {
                    c.skip_ws();
                    blk.name = s.substr(c.pos);
                    break;
                }
                if (word == "dim") {
                    long d = c.integer();
                    if (d < 0) c.fail("dim must be nonnegative");
                    blk.dim = static_cast<std::size_t>(d);
                    blk.seen.assign(*blk.dim, std::vector<bool>(*blk.dim, false));
                    break;
                }
                if (word == "field") {
                    if (section != Section::header) c.fail("field is set in the main header");
                    field = parse_field(c.ident(), ln.number);
                    break;
                }
                if (word == "species") {
                    blk.species = parse_species(c.ident(), ln.number);
                    break;
                }
                // product line: e<i>*e<j> = lincomb
                c.pos = save;
                if (!field) c.fail("field must be declared before products");
                if (!blk.dim) c.fail("dim must be declared before products");
                std::string lhs1 = c.ident();
                std::size_t i = basis_index(lhs1, *blk.dim, c);
                if (!c.eat('*')) c.fail("expected '*' in product line");
                std::size_t j = basis_index(c.ident(), *blk.dim, c);
                if (!c.eat('=')) c.fail("expected '=' in product line");
                if (blk.seen[i][j])
                    c.fail("duplicate product line e" + std::to_string(i + 1) + "*e" +
                           std::to_string(j + 1));
                blk.seen[i][j] = true;
                Vec val = parse_lincomb(s.substr(c.pos), ln.number, *field, *blk.dim);
                blk.products.push_back(ProductEntry{i, j, std::move(val)});
                break;
            }
            case Section::representation: {
                c.skip_ws();
                if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
                    std::string word = c.ident();
                    if (word == "regular") {
                        rep_regular = true;
                        break;
                    }
                    if (word == "dim") {
                        rep_dim_decl = static_cast<std::size_t>(c.integer());
                        break;
                    }
                    if (word == "rho" || word == "mu") {
                        std::string basis = c.ident();
                        if (!c.eat(':')) c.fail("expected ':' after action header");
                        rep_blocks.push_back({word + " " + basis, {}});
                        break;
                    }
                    c.fail("unexpected word '" + word + "' in [representation]");
                }
                if (rep_blocks.empty()) c.fail("matrix row outside an action block");
                rep_blocks.back().second.push_back(ln);
                break;
            }
            case Section::op_t: op_rows.push_back(ln); break;
            case Section::map_n: n_rows.push_back(ln); break;
            case Section::map_z: z_rows.push_back(ln); break;
            case Section::element: {
                std::string word = c.ident();
                if (word != "x" || !c.eat('=')) c.fail("expected 'x = <linear combination>'");
                if (!field || !main_block.dim) c.fail("element before header");
                element = parse_lincomb(s.substr(c.pos), ln.number, *field, *main_block.dim);
                element_line = ln.number;
                break;
            }
            case Section::family: {
                c.skip_ws();
                if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
                    std::size_t save = c.pos;
                    std::string word = c.ident();
                    if (word == "params") {
                        while (!c.done()) family_params.push_back(c.ident());
                        break;
                    }
                    c.pos = save;
                }
                family_rows.push_back(ln);
                break;
            }
            default: {  // action sections
                auto& blocks = cur_actions(section);
                c.skip_ws();
                if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
                    std::size_t save = c.pos;
                    std::string word = c.ident();
                    if (word.size() >= 2 && word[0] == 'e' && c.eat(':')) {
                        blocks.push_back({word, {}});
                        break;
                    }
                    c.pos = save;
                    c.fail("expected an action block header e<k>:");
                }
                if (blocks.empty()) c.fail("matrix row outside an action block");
                blocks.back().second.push_back(ln);
                break;
            }
        }
    }

    if (!field) throw parse_error("missing 'field' header", 1, 1);
    if (!main_block.dim) throw parse_error("missing 'dim' header", 1, 1);
    out.name = main_block.name;
    out.species = main_block.species;
    out.algebra = main_block.build(*field, opt.allow_small_char, 1);
    std::size_t a_dim = out.algebra->dim();

    if (second_block.dim) {
        out.name2 = second_block.name;
        out.species2 = second_block.species;
        out.algebra2 = second_block.build(*field, opt.allow_small_char, 1);
    }

    auto rows_to_mat = [&](const std::vector<Line>& rows, std::size_t r, std::size_t cdim,
                           const char* what) {
        if (rows.size() != r)
            throw parse_error(std::string(what) + ": expected " + std::to_string(r) + " rows, got " +
                                  std::to_string(rows.size()),
                              rows.empty() ? 1 : rows.front().number, 1);
        Matrix m(*field, r, cdim);
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<Scalar> vals = parse_row(rows[i].text, rows[i].number, *field, cdim);
            for (std::size_t j = 0; j < cdim; ++j) m.at(i, j) = vals[j];
        }
        return m;
    };

    bool is_prejj = out.species == Species::prejj_left || out.species == Species::prejj_right;
    if (rep_regular || rep_dim_decl || !rep_blocks.empty()) {
        out.has_representation = true;
        if (rep_regular) {
            out.rep_dim = a_dim;
            for (std::size_t i = 0; i < a_dim; ++i) {
                out.rho.push_back(out.algebra->left_mult(out.algebra->basis(i)).matrix());
                if (is_prejj)
                    out.mu.push_back(out.algebra->right_mult(out.algebra->basis(i)).matrix());
            }
        } else {
            if (!rep_dim_decl) throw parse_error("representation needs 'dim' or 'regular'", 1, 1);
            out.rep_dim = *rep_dim_decl;
            out.rho.assign(a_dim, Matrix(*field, out.rep_dim, out.rep_dim));
            if (is_prejj) out.mu.assign(a_dim, Matrix(*field, out.rep_dim, out.rep_dim));
            std::vector<bool> seen_rho(a_dim, false), seen_mu(a_dim, false);
            for (const auto& [header, rows] : rep_blocks) {
                std::istringstream hs(header);
                std::string kind, basis;
                hs >> kind >> basis;
                Cursor bc{basis, rows.empty() ? 1 : rows.front().number};
                std::size_t idx = basis_index(basis, a_dim, bc);
                Matrix m = rows_to_mat(rows, out.rep_dim, out.rep_dim, "action matrix");
                if (kind == "rho") {
                    out.rho[idx] = m;
                    seen_rho[idx] = true;
                } else {
                    if (!is_prejj)
                        throw parse_error("mu blocks require a prejj species",
                                          rows.empty() ? 1 : rows.front().number, 1);
                    out.mu[idx] = m;
                    seen_mu[idx] = true;
                }
            }
            for (std::size_t i = 0; i < a_dim; ++i) {
                if (!seen_rho[i])
                    throw parse_error("missing rho e" + std::to_string(i + 1) + " block", 1, 1);
                if (is_prejj && !seen_mu[i])
                    throw parse_error("missing mu e" + std::to_string(i + 1) + " block", 1, 1);
            }
        }
    }

    std::size_t v_dim = out.has_representation ? out.rep_dim : a_dim;
    if (!op_rows.empty()) out.op_t = LinearMap(rows_to_mat(op_rows, a_dim, v_dim, "operator T"));
    if (!n_rows.empty()) out.map_n = LinearMap(rows_to_mat(n_rows, a_dim, a_dim, "map N"));
    if (!z_rows.empty()) out.map_z = LinearMap(rows_to_mat(z_rows, a_dim, v_dim, "map Z"));
    if (element) out.element_x = *element;
    (void)element_line;

    if (out.algebra2) {
        std::size_t d2 = out.algebra2->dim();
        auto build_actions = [&](int which, std::size_t count, std::size_t mat_dim,
                                 std::vector<Matrix>& dst, const char* what) {
            auto& blocks = action_blocks[which];
            if (blocks.empty()) return;
            dst.assign(count, Matrix(*field, mat_dim, mat_dim));
            std::vector<bool> seen(count, false);
            for (const auto& [header, rows] : blocks) {
                Cursor bc{header, rows.empty() ? 1 : rows.front().number};
                std::size_t idx = basis_index(header, count, bc);
                dst[idx] = rows_to_mat(rows, mat_dim, mat_dim, what);
                seen[idx] = true;
            }
            for (std::size_t i = 0; i < count; ++i)
                if (!seen[i])
                    throw parse_error(std::string(what) + ": missing block e" +
                                          std::to_string(i + 1),
                                      1, 1);
        };
        build_actions(0, a_dim, d2, out.rho1, "action rho1");
        build_actions(1, a_dim, d2, out.mu1, "action mu1");
        build_actions(2, d2, a_dim, out.rho2, "action rho2");
        build_actions(3, d2, a_dim, out.mu2, "action mu2");
    }

    if (!family_rows.empty() || !family_params.empty()) {
        FamilySpec fs;
        fs.params = family_params;
        fs.rows = a_dim;
        fs.cols = v_dim;
        if (family_rows.size() != a_dim)
            throw parse_error("operator family: expected " + std::to_string(a_dim) + " rows",
                              family_rows.empty() ? 1 : family_rows.front().number, 1);
        for (const Line& ln : family_rows) {
            auto row = parse_family_row(ln.text, ln.number, *field, fs.params, v_dim);
            fs.entries.insert(fs.entries.end(), row.begin(), row.end());
        }
        out.family = std::move(fs);
    }
    return out;
}

AlgebraFile load_algebra_file(const std::string& path, const ParseOptions& opt) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_file(ss.str(), opt);
}

namespace {

std::string render_row(const Matrix& m, std::size_t r) {
    std::string s;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c) s += " ";
        s += m.at(r, c).str();
    }
    return s;
}

void render_matrix(std::string& out, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) out += render_row(m, r) + "\n";
}

void render_algebra(std::string& out, const FDAlgebra& a, const std::string& name,
                    Species species, bool with_field) {
    if (!name.empty()) out += "name " + name + "\n";
    out += "dim " + std::to_string(a.dim()) + "\n";
    if (with_field) out += "field " + a.field().str() + "\n";
    out += "species " + std::string(species_name(species)) + "\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec v = a.product_of_basis(i, j);
            if (!v.is_zero())
                out += "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = " +
                       format_lincomb(v, a.labels()) + "\n";
        }
}

std::string render_linexpr(const LinExpr& e, const std::vector<std::string>& params) {
    std::string s;
    auto append = [&](const Scalar& c, const std::string& sym) {
        if (c.is_zero()) return;
        std::string piece;
        Scalar v = c;
        bool neg = v.field().is_rational() && sgn(v.rat()) < 0;
        if (neg) v = -v;
        if (sym.empty())
            piece = v.str();
        else if (v.is_one())
            piece = sym;
        else
            piece = v.str() + sym;
        if (s.empty())
            s = (neg ? "-" : "") + piece;
        else
            s += (neg ? "-" : "+") + piece;
    };
    append(e.constant, "");
    for (std::size_t k = 0; k < params.size(); ++k) append(e.coeffs[k], params[k]);
    return s.empty() ? "0" : s;
}

}  // namespace

std::string serialize(const AlgebraFile& f) {
    std::string out;
    render_algebra(out, f.alg(), f.name, f.species, true);
    if (f.has_representation) {
        out += "\n[representation]\n";
        out += "dim " + std::to_string(f.rep_dim) + "\n";
        for (std::size_t i = 0; i < f.rho.size(); ++i) {
            out += "rho e" + std::to_string(i + 1) + ":\n";
            render_matrix(out, f.rho[i]);
        }
        for (std::size_t i = 0; i < f.mu.size(); ++i) {
            out += "mu e" + std::to_string(i + 1) + ":\n";
            render_matrix(out, f.mu[i]);
        }
    }
    if (f.op_t) {
        out += "\n[operator T]\n";
        render_matrix(out, f.op_t->matrix());
    }
    if (f.map_n) {
        out += "\n[map N]\n";
        render_matrix(out, f.map_n->matrix());
    }
    if (f.map_z) {
        out += "\n[map Z]\n";
        render_matrix(out, f.map_z->matrix());
    }
    if (f.element_x) {
        out += "\n[element x]\n";
        out += "x = " + format_lincomb(*f.element_x, f.alg().labels()) + "\n";
    }
    if (f.algebra2) {
        out += "\n[algebra2]\n";
        render_algebra(out, *f.algebra2, f.name2, f.species2, false);
        auto render_actions = [&](const std::vector<Matrix>& mats, const char* header) {
            if (mats.empty()) return;
            out += std::string("\n[") + header + "]\n";
            for (std::size_t i = 0; i < mats.size(); ++i) {
                out += "e" + std::to_string(i + 1) + ":\n";
                render_matrix(out, mats[i]);
            }
        };
        render_actions(f.rho1, "action rho1");
        render_actions(f.mu1, "action mu1");
        render_actions(f.rho2, "action rho2");
        render_actions(f.mu2, "action mu2");
    }
    if (f.family) {
        out += "\n[operator family]\n";
        out += "params";
        for (const std::string& p : f.family->params) out += " " + p;
        out += "\n";
        for (std::size_t r = 0; r < f.family->rows; ++r) {
            std::string row;
            for (std::size_t c = 0; c < f.family->cols; ++c) {
                if (c) row += " ";
                row += render_linexpr(f.family->entries[r * f.family->cols + c],
                                      f.family->params);
            }
            out += row + "\n";
        }
    }
    return out;
}

}  // namespace jjalg
