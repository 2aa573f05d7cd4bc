#include "ringlab/descriptor.hpp"

#include <cctype>

namespace ringlab {

bool GroupDescriptor::equals(const GroupDescriptor& other) const {
    if (kind != other.kind || n != other.n) return false;
    if (kind != Kind::product) return true;
    return left->equals(*other.left) && right->equals(*other.right);
}

bool RingDescriptor::equals(const RingDescriptor& other) const {
    if (kind != other.kind || a != other.a || b != other.b) return false;
    if (args.size() != other.args.size() || gens.size() != other.gens.size()) return false;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (!args[i]->equals(*other.args[i])) return false;
    if (gens != other.gens) return false;
    if ((group == nullptr) != (other.group == nullptr)) return false;
    if (group && !group->equals(*other.group)) return false;
    return true;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingDescriptorPtr parse_expr_toplevel() {
        auto d = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after expression");
        return d;
    }

    ElemLiteral parse_elem_toplevel() {
        auto e = parse_elem();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after element literal");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string parse_name() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
            // Names are short uppercase tags; stop before '(' handled by caller.
            if (!std::isupper(static_cast<unsigned char>(text_[pos_])) &&
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                break;
            ++pos_;
        }
        if (pos_ == start) fail("expected a constructor name");
        return std::string(text_.substr(start, pos_ - start));
    }

    long long parse_int() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        long long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + (text_[i] - '0');
            if (v > 1'000'000'000LL) {
                pos_ = start;
                fail("integer literal too large");
            }
        }
        return v;
    }

    unsigned parse_uint() { return static_cast<unsigned>(parse_int()); }

    GroupDescriptorPtr parse_group() {
        skip_ws();
        const std::size_t at = pos_;
        const std::string name = parse_name();
        auto g = std::make_shared<GroupDescriptor>();
        if (name == "C") {
            expect('(');
            g->kind = GroupDescriptor::Kind::cyclic;
            g->n = parse_uint();
            if (g->n == 0) {
                pos_ = at;
                fail("cyclic group order must be positive");
            }
            expect(')');
        } else if (name == "CP") {
            expect('(');
            g->kind = GroupDescriptor::Kind::product;
            g->left = parse_group();
            expect(',');
            g->right = parse_group();
            expect(')');
        } else if (name == "D4") {
            g->kind = GroupDescriptor::Kind::dihedral4;
        } else if (name == "Q8") {
            g->kind = GroupDescriptor::Kind::quaternion8;
        } else {
            pos_ = at;
            fail("unknown group constructor '" + name + "'");
        }
        return g;
    }

    RingDescriptorPtr parse_expr() {
        skip_ws();
        const std::size_t at = pos_;
        const std::string name = parse_name();
        auto d = std::make_shared<RingDescriptor>();
        using K = RingDescriptor::Kind;
        if (name == "Z") {
            expect('(');
            d->kind = K::zmod;
            d->a = parse_uint();
            expect(')');
        } else if (name == "B") {
            expect('(');
            d->kind = K::boolean_power;
            d->a = parse_uint();
            expect(')');
        } else if (name == "GF") {
            expect('(');
            d->kind = K::gf;
            d->a = parse_uint();
            expect(',');
            d->b = parse_uint();
            expect(')');
        } else if (name == "M" || name == "T") {
            expect('(');
            d->kind = name == "M" ? K::matrix : K::triangular;
            d->a = parse_uint();
            expect(',');
            d->args.push_back(parse_expr());
            expect(')');
        } else if (name == "BT") {
            expect('(');
            d->kind = K::block_triangular;
            d->args.push_back(parse_expr());
            expect(',');
            d->a = parse_uint();
            expect(',');
            d->b = parse_uint();
            expect(')');
        } else if (name == "DS") {
            expect('(');
            d->kind = K::direct_sum;
            d->args.push_back(parse_expr());
            while (try_consume(',')) d->args.push_back(parse_expr());
            expect(')');
        } else if (name == "TP") {
            expect('(');
            d->kind = K::truncated_poly;
            d->args.push_back(parse_expr());
            expect(',');
            d->a = parse_uint();
            expect(')');
        } else if (name == "TE") {
            expect('(');
            d->kind = K::trivial_extension;
            d->args.push_back(parse_expr());
            expect(')');
        } else if (name == "GR") {
            expect('(');
            d->kind = K::group_ring;
            d->args.push_back(parse_expr());
            expect(',');
            d->group = parse_group();
            expect(')');
        } else if (name == "SUB" || name == "Q") {
            expect('(');
            d->kind = name == "SUB" ? K::subring : K::quotient;
            d->args.push_back(parse_expr());
            expect(';');
            d->gens.push_back(parse_elem());
            while (try_consume(',')) d->gens.push_back(parse_elem());
            expect(')');
        } else if (name == "EX27") {
            expect('(');
            d->kind = K::ex27;
            d->a = parse_uint();
            expect(',');
            d->b = parse_uint();
            expect(')');
        } else {
            pos_ = at;
            fail("unknown ring constructor '" + name + "'");
        }
        return d;
    }

    ElemLiteral parse_elem() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected an element literal");
        ElemLiteral e;
        const char c = text_[pos_];
        if (c == '#') {
            ++pos_;
            e.kind = ElemLiteral::Kind::canonical;
            e.value = parse_int();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            e.kind = ElemLiteral::Kind::integer;
            e.value = parse_int();
        } else if (c == '[') {
            e.kind = ElemLiteral::Kind::matrix;
            expect('[');
            do {
                expect('[');
                std::vector<ElemLiteral> row;
                row.push_back(parse_elem());
                while (try_consume(',')) row.push_back(parse_elem());
                expect(']');
                e.rows.push_back(std::move(row));
            } while (try_consume(','));
            expect(']');
        } else if (c == '{') {
            e.kind = ElemLiteral::Kind::group_sum;
            expect('{');
            do {
                e.term_coeffs.push_back(parse_elem());
                expect('*');
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] != 'g') fail("expected a group word 'g<k>'");
                ++pos_;
                e.term_words.push_back(parse_uint());
            } while (try_consume('+'));
            expect('}');
        } else {
            fail("expected an element literal");
        }
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RingDescriptorPtr parse_ring_expr(std::string_view text) {
    return Parser(text).parse_expr_toplevel();
}

ElemLiteral parse_elem_literal(std::string_view text) { return Parser(text).parse_elem_toplevel(); }

std::string render(const GroupDescriptor& g) {
    switch (g.kind) {
        case GroupDescriptor::Kind::cyclic: return "C(" + std::to_string(g.n) + ")";
        case GroupDescriptor::Kind::product: return "CP(" + render(*g.left) + "," + render(*g.right) + ")";
        case GroupDescriptor::Kind::dihedral4: return "D4";
        case GroupDescriptor::Kind::quaternion8: return "Q8";
    }
    throw error("unreachable group kind");
}

std::string render(const ElemLiteral& e) {
    switch (e.kind) {
        case ElemLiteral::Kind::integer: return std::to_string(e.value);
        case ElemLiteral::Kind::canonical: return "#" + std::to_string(e.value);
        case ElemLiteral::Kind::matrix: {
            std::string out = "[";
            for (std::size_t r = 0; r < e.rows.size(); ++r) {
                out += r ? ",[" : "[";
                for (std::size_t c = 0; c < e.rows[r].size(); ++c) {
                    if (c) out += ",";
                    out += render(e.rows[r][c]);
                }
                out += "]";
            }
            return out + "]";
        }
        case ElemLiteral::Kind::group_sum: {
            std::string out = "{";
            for (std::size_t i = 0; i < e.term_coeffs.size(); ++i) {
                if (i) out += "+";
                out += render(e.term_coeffs[i]) + "*g" + std::to_string(e.term_words[i]);
            }
            return out + "}";
        }
    }
    throw error("unreachable literal kind");
}

std::string render(const RingDescriptor& d) {
    using K = RingDescriptor::Kind;
    auto num = [](unsigned v) { return std::to_string(v); };
    switch (d.kind) {
        case K::zmod: return "Z(" + num(d.a) + ")";
        case K::boolean_power: return "B(" + num(d.a) + ")";
        case K::gf: return "GF(" + num(d.a) + "," + num(d.b) + ")";
        case K::matrix: return "M(" + num(d.a) + "," + render(*d.args[0]) + ")";
        case K::triangular: return "T(" + num(d.a) + "," + render(*d.args[0]) + ")";
        case K::block_triangular:
            return "BT(" + render(*d.args[0]) + "," + num(d.a) + "," + num(d.b) + ")";
        case K::direct_sum: {
            std::string out = "DS(";
            for (std::size_t i = 0; i < d.args.size(); ++i) {
                if (i) out += ",";
                out += render(*d.args[i]);
            }
            return out + ")";
        }
        case K::truncated_poly: return "TP(" + render(*d.args[0]) + "," + num(d.a) + ")";
        case K::trivial_extension: return "TE(" + render(*d.args[0]) + ")";
        case K::group_ring: return "GR(" + render(*d.args[0]) + "," + render(*d.group) + ")";
        case K::subring:
        case K::quotient: {
            std::string out = (d.kind == K::subring ? "SUB(" : "Q(") + render(*d.args[0]) + ";";
            for (std::size_t i = 0; i < d.gens.size(); ++i) {
                if (i) out += ",";
                out += render(d.gens[i]);
            }
            return out + ")";
        }
        case K::ex27: return "EX27(" + num(d.a) + "," + num(d.b) + ")";
    }
    throw error("unreachable descriptor kind");
}

}  // namespace ringlab
