#include "heegaard/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

namespace heegaard {

using Index = Eigen::Index;

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

namespace {

std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

BigInt parse_int(const std::string& tok) {
    BigInt v;
    if (tok.empty() || v.set_str(tok, 10) != 0) throw ParseError("expected an integer, got '" + tok + "'");
    return v;
}

Index parse_size(const std::string& tok, const char* what) {
    const BigInt v = parse_int(tok);
    if (v < 0 || v > 4096) throw ParseError(std::string(what) + " out of range: " + tok);
    return static_cast<Index>(v.get_si());
}

bool is_keyword(const std::string& tok) {
    return tok == "genus" || tok == "matrix" || tok == "torsion" || tok == "rank" || tok == "linking" || tok == "rows" ||
           tok == "cols";
}

std::string render_matrix(const IntegerMatrix& m) {
    std::ostringstream os;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
        os << "\n";
    }
    return os.str();
}

}  // namespace

ParsedInput parse_input(std::istream& in) {
    const std::vector<std::string> tokens = tokenize(in);
    std::optional<Index> genus, rows, cols, rank;
    std::optional<std::vector<BigInt>> torsion;
    std::optional<IntegerMatrix> matrix;
    std::optional<RationalMatrix> linking;

    std::size_t pos = 0;
    auto next = [&](const char* what) -> const std::string& {
        if (pos >= tokens.size()) throw ParseError(std::string("unexpected end of input while reading ") + what);
        return tokens[pos++];
    };
    while (pos < tokens.size()) {
        const std::string key = tokens[pos++];
        if (key == "genus") {
            genus = parse_size(next("genus"), "genus");
        } else if (key == "rows") {
            rows = parse_size(next("rows"), "rows");
        } else if (key == "cols") {
            cols = parse_size(next("cols"), "cols");
        } else if (key == "rank") {
            rank = parse_size(next("rank"), "rank");
        } else if (key == "torsion") {
            std::vector<BigInt> t;
            while (pos < tokens.size() && !is_keyword(tokens[pos])) t.push_back(parse_int(tokens[pos++]));
            torsion = std::move(t);
        } else if (key == "matrix") {
            Index r = 0, c = 0;
            if (genus) r = c = 2 * *genus;
            else if (rows && cols) r = *rows, c = *cols;
            else throw ParseError("matrix needs genus, or rows and cols, first");
            IntegerMatrix m(r, c);
            for (Index i = 0; i < r; ++i)
                for (Index j = 0; j < c; ++j) m(i, j) = parse_int(next("matrix"));
            matrix = std::move(m);
        } else if (key == "linking") {
            if (!torsion) throw ParseError("linking needs torsion first");
            const Index t = static_cast<Index>(torsion->size());
            RationalMatrix m(t, t);
            for (Index i = 0; i < t; ++i)
                for (Index j = 0; j < t; ++j) {
                    const std::string& tok = next("linking");
                    try {
                        m(i, j) = parse_rational(tok);
                    } catch (const std::exception&) {
                        throw ParseError("expected a rational num/den, got '" + tok + "'");
                    }
                }
            linking = std::move(m);
        } else {
            throw ParseError("unknown keyword '" + key + "'");
        }
    }

    ParsedInput out;
    if (genus) {
        if (!matrix) throw ParseError("splitting input needs a matrix");
        if (torsion || linking || rows || cols) throw ParseError("splitting input mixes in other fields");
        out.kind = ParsedInput::Kind::Splitting;
        out.matrix = *matrix;
        out.canonical = "genus " + std::to_string(*genus) + "\nmatrix\n" + render_matrix(out.matrix);
    } else if (torsion) {
        if (matrix || rows || cols) throw ParseError("linked group input mixes in a matrix");
        const Index t = static_cast<Index>(torsion->size());
        if (!linking) {
            if (t != 0) throw ParseError("linked group input needs a linking matrix");
            linking = RationalMatrix(0, 0);
        }
        try {
            out.group = make_linked_group(rank.value_or(0), *torsion, *linking);
        } catch (const LinkingError& e) {
            throw ParseError(std::string("invalid linked group: ") + e.what());
        }
        out.kind = ParsedInput::Kind::Group;
        std::ostringstream os;
        os << "torsion";
        for (const auto& x : out.group.torsion) os << " " << x.get_str();
        os << "\nrank " << out.group.free_rank << "\nlinking\n";
        for (Index i = 0; i < t; ++i) {
            for (Index j = 0; j < t; ++j) os << (j ? " " : "") << to_string(out.group.linking(i, j));
            os << "\n";
        }
        out.canonical = os.str();
    } else if (matrix) {
        out.kind = ParsedInput::Kind::Matrix;
        out.matrix = *matrix;
        out.canonical = "rows " + std::to_string(matrix->rows()) + "\ncols " + std::to_string(matrix->cols()) +
                        "\nmatrix\n" + render_matrix(out.matrix);
    } else {
        throw ParseError("input has neither a matrix nor a linked group");
    }
    out.digest = sha256_hex(out.canonical);
    return out;
}

ParsedInput parse_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_input(in);
}

}  // namespace heegaard
