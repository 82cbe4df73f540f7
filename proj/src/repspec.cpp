#include "symdecomp/repspec.hpp"

#include <cctype>
#include <optional>

namespace symdecomp {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw parse_error("expected '" + std::string(1, c) + "' at position " +
                              std::to_string(pos) + " in \"" + s + "\"");
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw parse_error("expected a constructor name at position " +
                                            std::to_string(pos) + " in \"" + s + "\"");
        return s.substr(start, pos - start);
    }

    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos)
            throw parse_error("expected an integer at position " + std::to_string(pos));
        return std::stoi(s.substr(start, pos - start));
    }

    std::string until_close() {  // raw argument for file(...)
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] != ')') ++pos;
        std::string out = s.substr(start, pos - start);
        while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
        return out;
    }

    Representation expr() {
        std::string name = ident();
        expect('(');
        if (name == "perm") {
            int n = integer();
            expect(')');
            return permutation_representation(n);
        }
        if (name == "regular") {
            int n = integer();
            expect(')');
            return regular_representation(n);
        }
        if (name == "irrep") {
            std::vector<int> parts{integer()};
            while (eat(',')) parts.push_back(integer());
            expect(')');
            return irrep_representation(Partition(parts));
        }
        if (name == "file") {
            std::string path = until_close();
            expect(')');
            return representation_from_file(path);
        }
        if (name == "tensor" || name == "dsum") {
            std::vector<Representation> args{expr()};
            while (eat(',')) args.push_back(expr());
            expect(')');
            if (args.size() < 2)
                throw parse_error(name + " needs at least two arguments");
            return name == "tensor" ? tensor_product(args) : direct_sum(args);
        }
        if (name == "power") {
            Representation base = expr();
            expect(',');
            int k = integer();
            expect(')');
            return tensor_power(base, k);
        }
        throw parse_error("unknown constructor \"" + name + "\"");
    }
};

}  // namespace

Representation parse_repspec(const std::string& text) {
    Parser p{text};
    try {
        Representation r = p.expr();
        p.skip_ws();
        if (p.pos != text.size())
            throw parse_error("trailing characters after expression: \"" + text.substr(p.pos) + "\"");
        return r;
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

Partition parse_partition(const std::string& text) {
    Parser p{text};
    try {
        std::vector<int> parts{p.integer()};
        while (p.eat(',')) parts.push_back(p.integer());
        p.skip_ws();
        if (p.pos != text.size())
            throw parse_error("trailing characters in partition: \"" + text.substr(p.pos) + "\"");
        return Partition(parts);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

}  // namespace symdecomp
