#include "shiftmin/shift_tile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace shiftmin {

ParseError::ParseError(std::string const& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace detail {

bool TokenReader::next_token(std::string& token)
{
    token.clear();
    int c = in_.get();
    while (c != std::char_traits<char>::eof() && std::isspace(c)) {
        if (c == '\n')
            ++line_;
        c = in_.get();
    }
    while (c != std::char_traits<char>::eof() && !std::isspace(c)) {
        token.push_back(static_cast<char>(c));
        c = in_.get();
    }
    if (c == '\n')
        in_.unget();
    if (token.empty())
        return false;
    last_token_line_ = line_;
    return true;
}

std::uint64_t TokenReader::next_unsigned(char const* what)
{
    std::string token;
    if (!next_token(token))
        throw ParseError(std::string("unexpected end of input, expected ") + what, last_token_line_);
    std::uint64_t value = 0;
    auto const* first = token.data();
    auto const* last = first + token.size();
    auto const [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(std::string(what) + " '" + token + "' overflows 64 bits", line_);
    if (ec != std::errc() || ptr != last)
        throw ParseError(std::string("invalid ") + what + " '" + token + "'", line_);
    return value;
}

void TokenReader::expect_end()
{
    std::string token;
    if (next_token(token))
        throw ParseError("trailing token '" + token + "'", line_);
}

std::vector<std::uint64_t> read_mantissas(TokenReader& reader, std::size_t count, WordSize word)
{
    std::vector<std::uint64_t> values;
    values.reserve(std::min<std::size_t>(count, std::size_t{1} << 20));
    for (std::size_t k = 0; k < count; ++k) {
        auto const m = reader.next_unsigned("mantissa");
        if (!word.holds(m))
            throw ParseError("mantissa " + std::to_string(m) + " does not fit in " + std::to_string(word.bits()) +
                                 " bits",
                             reader.line());
        values.push_back(m);
    }
    reader.expect_end();
    return values;
}

} // namespace detail

namespace {

WordSize read_word_size(detail::TokenReader& reader)
{
    auto const bits = reader.next_unsigned("word size");
    if (bits < 1 || bits > 64)
        throw ParseError("word size must be in [1, 64], got " + std::to_string(bits), reader.line());
    return WordSize(static_cast<int>(bits));
}

std::size_t read_extent(detail::TokenReader& reader, char const* what)
{
    auto const n = reader.next_unsigned(what);
    if (n == 0)
        throw ParseError(std::string(what) + " must be positive", reader.line());
    // Caps the allocation below; 2^32 entries per axis is far beyond any tile.
    if (n > (std::uint64_t{1} << 32))
        throw ParseError(std::string(what) + " too large", reader.line());
    return static_cast<std::size_t>(n);
}

std::size_t wrap_coordinate(std::int64_t v, std::size_t extent, Wrap wrap, char const* axis)
{
    auto const n = static_cast<std::int64_t>(extent);
    if (wrap == Wrap::toroidal)
        return static_cast<std::size_t>(((v % n) + n) % n);
    if (v < 0 || v >= n)
        throw std::out_of_range(std::string(axis) + " coordinate " + std::to_string(v) + " outside tile");
    return static_cast<std::size_t>(v);
}

void check_mantissas(std::vector<std::uint64_t> const& mantissas, std::size_t expected, WordSize word)
{
    if (mantissas.size() != expected)
        throw std::invalid_argument("tile holds " + std::to_string(mantissas.size()) + " shifts, expected " +
                                    std::to_string(expected));
    for (auto m : mantissas)
        if (!word.holds(m))
            throw std::out_of_range("tile shift " + std::to_string(m) + " does not fit in " +
                                    std::to_string(word.bits()) + " bits");
}

void write_rows(std::ostream& out, std::vector<std::uint64_t> const& values, std::size_t width)
{
    for (std::size_t k = 0; k < values.size(); ++k) {
        out << values[k];
        out << ((k + 1) % width == 0 ? '\n' : ' ');
    }
}

} // namespace

ShiftTile::ShiftTile(WordSize word, std::size_t width, std::size_t height, std::vector<std::uint64_t> mantissas)
    : word_(word), width_(width), height_(height), mantissas_(std::move(mantissas))
{
    if (width == 0 || height == 0)
        throw std::invalid_argument("tile dimensions must be positive");
    check_mantissas(mantissas_, width * height, word);
}

UnitFixed ShiftTile::shift(std::int64_t x, std::int64_t y, Wrap wrap) const
{
    auto const col = wrap_coordinate(x, width_, wrap, "x");
    auto const row = wrap_coordinate(y, height_, wrap, "y");
    return {mantissas_[row * width_ + col], word_};
}

ShiftTile ShiftTile::parse(std::istream& in)
{
    detail::TokenReader reader(in);
    auto const word = read_word_size(reader);
    auto const width = read_extent(reader, "width");
    auto const height = read_extent(reader, "height");
    auto values = detail::read_mantissas(reader, width * height, word);
    return {word, width, height, std::move(values)};
}

ShiftTile ShiftTile::load(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string(), 0);
    return parse(in);
}

void ShiftTile::write(std::ostream& out) const
{
    out << word_.bits() << ' ' << width_ << ' ' << height_ << '\n';
    write_rows(out, mantissas_, width_);
}

void ShiftTile::save(std::filesystem::path const& path) const
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    write(out);
}

ShiftTile3D::ShiftTile3D(WordSize word, std::size_t width, std::size_t height, std::size_t frames,
                         std::vector<std::uint64_t> mantissas)
    : word_(word), width_(width), height_(height), frames_(frames), mantissas_(std::move(mantissas))
{
    if (width == 0 || height == 0 || frames == 0)
        throw std::invalid_argument("tile dimensions must be positive");
    check_mantissas(mantissas_, width * height * frames, word);
}

UnitFixed ShiftTile3D::shift(std::int64_t x, std::int64_t y, std::int64_t frame, Wrap wrap) const
{
    auto const col = wrap_coordinate(x, width_, wrap, "x");
    auto const row = wrap_coordinate(y, height_, wrap, "y");
    auto const f = wrap_coordinate(frame, frames_, wrap, "frame");
    return {mantissas_[(f * height_ + row) * width_ + col], word_};
}

ShiftTile3D ShiftTile3D::parse(std::istream& in)
{
    detail::TokenReader reader(in);
    auto const word = read_word_size(reader);
    auto const width = read_extent(reader, "width");
    auto const height = read_extent(reader, "height");
    auto const frames = read_extent(reader, "frames");
    auto values = detail::read_mantissas(reader, width * height * frames, word);
    return {word, width, height, frames, std::move(values)};
}

ShiftTile3D ShiftTile3D::load(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string(), 0);
    return parse(in);
}

void ShiftTile3D::write(std::ostream& out) const
{
    out << word_.bits() << ' ' << width_ << ' ' << height_ << ' ' << frames_ << '\n';
    write_rows(out, mantissas_, width_);
}

} // namespace shiftmin
