#include "hopfq/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hopfq {

namespace {

struct LineReader {
  std::istream& in;
  std::size_t number = 0;

  /// Next significant line, split on whitespace; empty at end of input.
  std::vector<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++number;
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens[0][0] == '#') continue;
      return tokens;
    }
    return {};
  }
};

std::size_t parse_index(const std::string& tok, std::size_t bound,
                        std::size_t line) {
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected an index, got '" + tok + "'", line);
  std::size_t v = std::stoull(tok);
  if (v >= bound)
    throw ParseError("index " + tok + " out of range (dim " +
                         std::to_string(bound) + ")",
                     line);
  return v;
}

Scalar parse_value(const Field& f, const std::string& tok, std::size_t line) {
  try {
    return Scalar::parse(f, tok);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

void set_once(LinMap& m, std::size_t r, std::size_t c, const Scalar& v,
              std::size_t line) {
  if (!m.at(r, c).is_zero())
    throw ParseError("duplicate entry", line);
  m.set(r, c, v);
}

}  // namespace

StructureDocument parse_structure(std::istream& in) {
  LineReader reader{in};

  auto expect = [&](const std::vector<std::string>& t, const char* what) {
    if (t.empty()) throw ParseError(std::string("unexpected end of file, expected ") + what,
                                    reader.number);
  };

  std::vector<std::string> t = reader.next();
  expect(t, "format_version");
  if (t[0] != "format_version" || t.size() != 2 || t[1] != "1")
    throw ParseError("expected 'format_version 1'", reader.number);

  t = reader.next();
  expect(t, "field");
  if (t[0] != "field" || t.size() < 2) throw ParseError("expected 'field QQ' or 'field GF <p>'", reader.number);
  Field field = Field::rationals();
  if (t[1] == "QQ" && t.size() == 2) {
    // rationals
  } else if (t[1] == "GF" && t.size() == 3) {
    try {
      field = Field::prime(static_cast<std::uint32_t>(std::stoul(t[2])));
    } catch (const std::exception&) {
      throw ParseError("invalid field modulus '" + t[2] + "'", reader.number);
    }
  } else {
    throw ParseError("unknown field declaration", reader.number);
  }

  t = reader.next();
  expect(t, "dim");
  if (t[0] != "dim" || t.size() != 2) throw ParseError("expected 'dim <n>'", reader.number);
  std::size_t n = parse_index(t[1], std::size_t(1) << 20, reader.number) ;
  if (n == 0) throw ParseError("dimension must be positive", reader.number);

  StructureDocument doc;
  doc.structure = RawStructure::zeros(field, n, false);
  bool saw_mu = false, saw_delta = false, saw_unit = false, saw_counit = false;
  std::vector<bool> unit_seen(n, false), counit_seen(n, false);

  auto read_tensor_section =
      [&](const std::string& section, auto&& entry) {
        for (;;) {
          std::vector<std::string> line = reader.next();
          expect(line, ("end " + section).c_str());
          if (line[0] == "end") {
            if (line.size() != 2 || line[1] != section)
              throw ParseError("expected 'end " + section + "'", reader.number);
            return;
          }
          entry(line);
        }
      };

  for (;;) {
    t = reader.next();
    if (t.empty()) break;
    if (t[0] != "begin" || t.size() < 2)
      throw ParseError("expected a 'begin <section>' line", reader.number);
    const std::string section = t[1];

    if (section == "mu" || section == "delta") {
      bool is_mu = section == "mu";
      (is_mu ? saw_mu : saw_delta) = true;
      read_tensor_section(section, [&](const std::vector<std::string>& line) {
        if (line.size() != 4)
          throw ParseError("expected 'i j k value'", reader.number);
        std::size_t i = parse_index(line[0], n, reader.number);
        std::size_t j = parse_index(line[1], n, reader.number);
        std::size_t k = parse_index(line[2], n, reader.number);
        Scalar v = parse_value(field, line[3], reader.number);
        Scalar& slot = is_mu ? doc.structure.mu_at(i, j, k)
                             : doc.structure.delta_at(i, j, k);
        if (!slot.is_zero()) throw ParseError("duplicate entry", reader.number);
        slot = v;
      });
    } else if (section == "unit" || section == "counit") {
      bool is_unit = section == "unit";
      (is_unit ? saw_unit : saw_counit) = true;
      read_tensor_section(section, [&](const std::vector<std::string>& line) {
        if (line.size() != 2)
          throw ParseError("expected 'i value'", reader.number);
        std::size_t i = parse_index(line[0], n, reader.number);
        auto& seen = is_unit ? unit_seen : counit_seen;
        if (seen[i]) throw ParseError("duplicate entry", reader.number);
        seen[i] = true;
        (is_unit ? doc.structure.unit : doc.structure.counit)[i] =
            parse_value(field, line[1], reader.number);
      });
    } else if (section == "antipode") {
      if (doc.structure.antipode)
        throw ParseError("second antipode section", reader.number);
      doc.structure.antipode =
          std::vector<Scalar>(n * n, Scalar::zero(field));
      read_tensor_section(section, [&](const std::vector<std::string>& line) {
        if (line.size() != 3)
          throw ParseError("expected 'i j value'", reader.number);
        std::size_t i = parse_index(line[0], n, reader.number);
        std::size_t j = parse_index(line[1], n, reader.number);
        Scalar& slot = doc.structure.antipode_at(i, j);
        if (!slot.is_zero()) throw ParseError("duplicate entry", reader.number);
        slot = parse_value(field, line[2], reader.number);
      });
    } else if (section == "module") {
      if (t.size() != 3) throw ParseError("expected 'begin module <name>'", reader.number);
      ModuleEntry mod{t[2], 0, LinMap(field, {}, {}), LinMap(field, {}, {})};
      std::vector<std::string> line = reader.next();
      expect(line, "dim");
      if (line[0] != "dim" || line.size() != 2)
        throw ParseError("expected 'dim <m>' inside module", reader.number);
      mod.dim = parse_index(line[1], std::size_t(1) << 20, reader.number);
      if (mod.dim == 0) throw ParseError("module dimension must be positive", reader.number);
      std::size_t m = mod.dim;
      mod.action = LinMap(field, {m, n}, {m});
      mod.coaction = LinMap(field, {m}, {m, n});
      bool saw_action = false, saw_coaction = false;
      for (;;) {
        line = reader.next();
        expect(line, "end module");
        if (line[0] == "end") {
          if (line.size() != 2 || line[1] != "module")
            throw ParseError("expected 'end module'", reader.number);
          break;
        }
        if (line[0] != "begin" || line.size() != 2)
          throw ParseError("expected 'begin action' or 'begin coaction'", reader.number);
        if (line[1] == "action") {
          saw_action = true;
          read_tensor_section("action", [&](const std::vector<std::string>& e) {
            if (e.size() != 4) throw ParseError("expected 'a i b value'", reader.number);
            std::size_t a = parse_index(e[0], m, reader.number);
            std::size_t i = parse_index(e[1], n, reader.number);
            std::size_t b = parse_index(e[2], m, reader.number);
            set_once(mod.action, b, a * n + i,
                     parse_value(field, e[3], reader.number), reader.number);
          });
        } else if (line[1] == "coaction") {
          saw_coaction = true;
          read_tensor_section("coaction", [&](const std::vector<std::string>& e) {
            if (e.size() != 4) throw ParseError("expected 'a b i value'", reader.number);
            std::size_t a = parse_index(e[0], m, reader.number);
            std::size_t b = parse_index(e[1], m, reader.number);
            std::size_t i = parse_index(e[2], n, reader.number);
            set_once(mod.coaction, b * n + i, a,
                     parse_value(field, e[3], reader.number), reader.number);
          });
        } else {
          throw ParseError("unknown module section '" + line[1] + "'", reader.number);
        }
      }
      if (!saw_action || !saw_coaction)
        throw ParseError("module needs both an action and a coaction", reader.number);
      doc.modules.push_back(std::move(mod));
    } else {
      throw ParseError("unknown section '" + section + "'", reader.number);
    }
  }

  if (!saw_mu || !saw_delta || !saw_unit || !saw_counit)
    throw ParseError("file is missing a mu, delta, unit, or counit section",
                     reader.number);
  return doc;
}

StructureDocument parse_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_structure(in);
}

std::string render_structure(const StructureDocument& doc) {
  const RawStructure& raw = doc.structure;
  std::size_t n = raw.dim;
  std::ostringstream out;
  out << "format_version 1\n";
  out << "field " << raw.field.to_string() << "\n";
  out << "dim " << n << "\n";

  out << "begin mu\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = raw.mu[(i * n + j) * n + k];
        if (!v.is_zero())
          out << i << ' ' << j << ' ' << k << ' ' << v.to_literal() << "\n";
      }
  out << "end mu\n";

  out << "begin delta\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = raw.delta[(i * n + j) * n + k];
        if (!v.is_zero())
          out << i << ' ' << j << ' ' << k << ' ' << v.to_literal() << "\n";
      }
  out << "end delta\n";

  out << "begin unit\n";
  for (std::size_t i = 0; i < n; ++i)
    if (!raw.unit[i].is_zero())
      out << i << ' ' << raw.unit[i].to_literal() << "\n";
  out << "end unit\n";

  out << "begin counit\n";
  for (std::size_t i = 0; i < n; ++i)
    if (!raw.counit[i].is_zero())
      out << i << ' ' << raw.counit[i].to_literal() << "\n";
  out << "end counit\n";

  if (raw.antipode) {
    out << "begin antipode\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& v = (*raw.antipode)[i * n + j];
        if (!v.is_zero()) out << i << ' ' << j << ' ' << v.to_literal() << "\n";
      }
    out << "end antipode\n";
  }

  for (const ModuleEntry& mod : doc.modules) {
    out << "begin module " << mod.name << "\n";
    out << "dim " << mod.dim << "\n";
    out << "begin action\n";
    for (std::size_t a = 0; a < mod.dim; ++a)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < mod.dim; ++b) {
          Scalar v = mod.action.at(b, a * n + i);
          if (!v.is_zero())
            out << a << ' ' << i << ' ' << b << ' ' << v.to_literal() << "\n";
        }
    out << "end action\n";
    out << "begin coaction\n";
    for (std::size_t a = 0; a < mod.dim; ++a)
      for (std::size_t b = 0; b < mod.dim; ++b)
        for (std::size_t i = 0; i < n; ++i) {
          Scalar v = mod.coaction.at(b * n + i, a);
          if (!v.is_zero())
            out << a << ' ' << b << ' ' << i << ' ' << v.to_literal() << "\n";
        }
    out << "end coaction\n";
    out << "end module\n";
  }
  return out.str();
}

LoopTable parse_loop_table(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> t = reader.next();
  if (t.size() != 2)
    throw ParseError("expected 'order identity_index' on the first line",
                     reader.number);
  std::size_t order = parse_index(t[0], 1 << 16, reader.number);
  if (order == 0) throw ParseError("order must be positive", reader.number);
  std::size_t identity = parse_index(t[1], order, reader.number);

  std::vector<std::vector<std::size_t>> rows;
  for (std::size_t r = 0; r < order; ++r) {
    t = reader.next();
    if (t.size() != order)
      throw ParseError("expected a row of " + std::to_string(order) + " indices",
                       reader.number);
    std::vector<std::size_t> row;
    row.reserve(order);
    for (const std::string& tok : t) row.push_back(parse_index(tok, order, reader.number));
    rows.push_back(std::move(row));
  }
  LoopTable table;
  try {
    table = make_loop_table(std::move(rows));
  } catch (const Error& e) {
    throw ParseError(e.what(), reader.number);
  }
  if (table.identity != identity)
    throw ParseError("declared identity index " + std::to_string(identity) +
                         " is not the table identity",
                     reader.number);
  return table;
}

LoopTable parse_loop_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_loop_table(in);
}

std::string render_loop_table(const LoopTable& t) {
  std::ostringstream out;
  out << t.order << ' ' << t.identity << "\n";
  for (const auto& row : t.table) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  return out.str();
}

}  // namespace hopfq
