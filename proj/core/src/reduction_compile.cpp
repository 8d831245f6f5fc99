#include <algorithm>
#include <optional>
#include <string>

#include "racforge/errors.hpp"
#include "racforge/reduction.hpp"

namespace racforge {

namespace {

// Integer grid layout. Every intended crossing is either an axis-parallel
// pair or a slope +1 / slope -1 pair inside an antiprism unit, so
// perpendicularity is exact by construction.
struct Layout {
  int n, m;
  explicit Layout(const CnfFormula& f) : n(f.num_variables), m(f.num_clauses()) {}

  static constexpr long kCorridorHeight = 2;  // gap between corridor bound edges

  long pitch() const { return 2L * m + 20; }
  long ax(int tower) const { return 20 + tower * pitch(); }  // tower axis x
  long ax_last() const { return ax(n + 1); }

  // Tower vertical levels.
  long slot_y(int j) const { return 26 + 8L * (j - 1); }     // j = 1..m
  long corridor_lo(int j) const { return slot_y(j) + 3; }    // bound below gap j
  long corridor_hi(int j) const { return corridor_lo(j) + kCorridorHeight; }
  long attach_lo() const { return 8L * m + 24; }             // connector attach rows
  long attach_hi() const { return 8L * m + 30; }
  long conn_a_y() const { return 8L * m + 26; }
  long conn_b_y() const { return 8L * m + 28; }
  long cap_bot() const { return 8L * m + 32; }

  long lane_dx(int j) const { return 7 + j; }                // endpoint / riser offset
  long post_dx() const { return m + 9; }                     // corridor post offset

  // Clause band levels (below the horizontal part).
  long hub_y(int j) const { return -12L * j; }

  // Vertical part x positions.
  long xt() const { return ax_last() + std::max<long>(m + 11, 14); }
  long vr1_x() const { return xt() + 2; }   // outer vertical rail
  long vr2_x() const { return xt() + 4; }   // inner vertical rail
  long trap_left_x() const { return xt() + 6; }
  long hub_x() const { return xt() + 8; }
  long trap_right_x() const { return xt() + 10; }
  long vspine_x() const { return xt() + 14; }
  long band_unit_cx() const { return xt() + 21; }

  long xq() const { return ax_last() + 12; }  // long-pair crossing column
};

struct Builder {
  const CnfFormula& f;
  const Assignment* assignment;  // nullptr: graph + labels only
  Layout ly;
  LabeledGraph lg;
  Drawing dr;

  Builder(const CnfFormula& formula, const Assignment* a)
      : f(formula), assignment(a), ly(formula) {}

  bool placing() const { return assignment != nullptr; }
  int side_sign(int tower) const {
    // +1 draws the positive-endpoint wall on the right. Dummies never flip.
    if (!placing() || tower < 1 || tower > ly.n) return 1;
    return (*assignment)[tower - 1] ? 1 : -1;
  }

  void add(const VertexId& v, long x, long y) {
    lg.graph.add_vertex(v);
    if (placing()) dr.positions[v] = Point{Rational(x), Rational(y)};
  }
  void edge(const VertexId& a, const VertexId& b) { lg.graph.add_edge(a, b); }
  void role_add(const std::string& name, const VertexId& v) { lg.roles[name].push_back(v); }

  // One augmented square antiprism unit around (cx, cy), ring radius 3,
  // diamond radius 2, mirrored horizontally when s = -1. skip2/skip3 replace
  // o2/o3 by existing vertices (ring-edge identification for the oplus glue).
  struct UnitNames {
    VertexId c, o0, o1, o2, o3, i0, i1, i2, i3;
  };
  UnitNames unit(const std::string& p, long cx, long cy, int s,
                 const VertexId& skip2 = "", const VertexId& skip3 = "") {
    UnitNames u;
    u.c = p + ".c";
    u.o0 = p + ".o0";
    u.o1 = p + ".o1";
    u.o2 = skip2.empty() ? p + ".o2" : skip2;
    u.o3 = skip3.empty() ? p + ".o3" : skip3;
    u.i0 = p + ".i0";
    u.i1 = p + ".i1";
    u.i2 = p + ".i2";
    u.i3 = p + ".i3";
    add(u.c, cx, cy);
    add(u.o0, cx + 3 * s, cy + 3);
    add(u.o1, cx - 3 * s, cy + 3);
    if (skip2.empty()) add(u.o2, cx - 3 * s, cy - 3);
    if (skip3.empty()) add(u.o3, cx + 3 * s, cy - 3);
    add(u.i0, cx + 2 * s, cy);
    add(u.i1, cx, cy + 2);
    add(u.i2, cx - 2 * s, cy);
    add(u.i3, cx, cy - 2);
    const VertexId outer[4] = {u.o0, u.o1, u.o2, u.o3};
    const VertexId inner[4] = {u.i0, u.i1, u.i2, u.i3};
    for (int t = 0; t < 4; ++t) {
      // The o2-o3 ring edge already exists when both are identified away.
      const bool shared_ring_edge = (t == 2 && !skip2.empty() && !skip3.empty());
      if (!shared_ring_edge) edge(outer[t], outer[(t + 1) % 4]);
      edge(inner[t], inner[(t + 1) % 4]);
      edge(u.c, outer[t]);
      edge(u.c, inner[t]);
      edge(inner[t], outer[t]);
      edge(inner[t], outer[(t + 3) % 4]);
    }
    return u;
  }

  std::vector<VertexId> skeleton_h, skeleton_v;

  void build();
  void build_horizontal_skeleton();
  void build_tower(int t);
  void build_connector_lines();
  void build_vertical_skeleton();
  void build_clause(int j);
  void build_paths(int j);
};

void Builder::build_horizontal_skeleton() {
  const long a0 = ly.ax(0), al = ly.ax_last();
  auto sk = [&](const VertexId& v, long x, long y) {
    add(v, x, y);
    skeleton_h.push_back(v);
  };
  // Spine along y = 0, left to right.
  sk("sk.h.r2l", a0 - 6, 0);
  sk("sk.h.r1l", a0 - 4, 0);
  for (int t = 0; t <= ly.n + 1; ++t) sk("sk.h.a" + std::to_string(t), ly.ax(t), 0);
  sk("sk.h.r1r", al + 4, 0);
  sk("sk.h.r2r", al + 6, 0);
  sk("sk.h.hs", ly.xq() - 4, 0);
  sk("sk.h.vl", ly.xq(), 0);
  edge("sk.h.r2l", "sk.h.r1l");
  edge("sk.h.r1l", "sk.h.a0");
  for (int t = 0; t <= ly.n; ++t) {
    edge("sk.h.a" + std::to_string(t), "sk.h.a" + std::to_string(t + 1));
  }
  edge("sk.h.a" + std::to_string(ly.n + 1), "sk.h.r1r");
  edge("sk.h.r1r", "sk.h.r2r");
  edge("sk.h.r2r", "sk.h.hs");
  edge("sk.h.hs", "sk.h.vl");

  // The set of horizontal rails the tower anchors cross perpendicularly.
  sk("sk.h.rail1l", a0 - 4, 4);
  sk("sk.h.rail1r", al + 4, 4);
  sk("sk.h.rail2l", a0 - 6, 2);
  sk("sk.h.rail2r", al + 6, 2);
  edge("sk.h.rail1l", "sk.h.rail1r");
  edge("sk.h.rail2l", "sk.h.rail2r");
  edge("sk.h.rail1l", "sk.h.r1l");  // end stubs; rail1's cross rail2
  edge("sk.h.rail1r", "sk.h.r1r");
  edge("sk.h.rail2l", "sk.h.r2l");
  edge("sk.h.rail2r", "sk.h.r2r");

  // Long perpendicular pair locking the vertical part to the horizontal one.
  sk("sk.h.hlt", ly.xq() - 4, 6);
  sk("sk.h.vlt", ly.xq(), 8);
  edge("sk.h.hlt", "sk.h.hs");  // support post
  edge("sk.h.vl", "sk.h.vlt");  // the vertical long edge
}

void Builder::build_tower(int t) {
  const bool is_dummy = (t == 0 || t == ly.n + 1);
  const std::string p = "t" + std::to_string(t);
  const long ax = ly.ax(t);
  const int s = side_sign(t);
  std::vector<VertexId> members;
  auto remember = [&](const VertexId& v) { members.push_back(v); };

  // Bottom oplus pair: two units sharing a ring edge plus the inner tie.
  const UnitNames b = unit(p + ".b", ax, 13, s);
  const UnitNames q = unit(p + ".p", ax, 19, s, b.o1, b.o0);
  edge(b.i1, q.i3);  // the oplus tie, crossing the shared ring edge
  // Cap unit.
  const UnitNames cap = unit(p + ".cap", ax, ly.cap_bot() + 3, s);
  for (const auto& u : {b, q}) {
    remember(u.c);
    remember(u.i0);
    remember(u.i1);
    remember(u.i2);
    remember(u.i3);
    remember(u.o0);
    remember(u.o1);
  }
  remember(b.o2);
  remember(b.o3);
  remember(cap.c);
  for (const auto& v :
       {cap.o0, cap.o1, cap.o2, cap.o3, cap.i0, cap.i1, cap.i2, cap.i3}) {
    remember(v);
  }

  // Anchor: from the pair's bottom inner vertex straight down to the spine,
  // crossing the unit's bottom ring edge and both rails perpendicularly.
  edge(b.i3, "sk.h.a" + std::to_string(t));

  // Wall chains. Side A carries the positive endpoints, side B the negated
  // ones; which is drawn left is the per-variable mirror choice.
  struct WallVert {
    long y;
    VertexId id;
  };
  auto build_wall = [&](char side) {
    const int wall_s = (side == 'A') ? s : -s;
    const long wx = ax + 3 * wall_s;
    std::vector<WallVert> verts;
    auto wall_vert = [&](long y) {
      VertexId id = p + ".w" + side + "." + std::to_string(y);
      add(id, wx, y);
      remember(id);
      verts.push_back({y, id});
      return id;
    };
    if (!is_dummy) {
      for (int j = 1; j <= ly.m; ++j) {
        const long sy = ly.slot_y(j);
        wall_vert(sy - 2);
        wall_vert(sy - 1);
        wall_vert(sy + 1);
        wall_vert(sy + 2);
        if (j < ly.m) {
          wall_vert(ly.corridor_lo(j));
          wall_vert(ly.corridor_hi(j));
        }
      }
    }
    wall_vert(ly.attach_lo());
    wall_vert(ly.attach_hi());
    // unit() already applies the mirror, so side A always owns o0/o3.
    const VertexId top = (side == 'A') ? cap.o3 : cap.o2;
    VertexId prev = (side == 'A') ? q.o0 : q.o1;
    for (const auto& wv : verts) {
      edge(prev, wv.id);
      prev = wv.id;
    }
    edge(prev, top);
    return verts;
  };
  const auto wallA = build_wall('A');
  const auto wallB = build_wall('B');
  auto wall_at = [&](const std::vector<WallVert>& w, long y) -> const VertexId& {
    for (const auto& wv : w) {
      if (wv.y == y) return wv.id;
    }
    throw InvalidParameter("internal: missing wall vertex at y=" + std::to_string(y));
  };

  // Connectors sit on the mirror axis with symmetric slanted attachments, so
  // per-variable mirroring never moves them.
  const VertexId cnA = p + ".cnA";
  const VertexId cnB = p + ".cnB";
  add(cnA, ax, ly.conn_a_y());
  add(cnB, ax, ly.conn_b_y());
  remember(cnA);
  remember(cnB);
  edge(cnA, wall_at(wallA, ly.attach_lo()));
  edge(cnA, wall_at(wallB, ly.attach_lo()));
  edge(cnB, wall_at(wallA, ly.attach_hi()));
  edge(cnB, wall_at(wallB, ly.attach_hi()));
  role_add("connector:" + std::to_string(t), cnA);
  role_add("connector:" + std::to_string(t), cnB);

  if (!is_dummy) {
    const int i = t;
    for (int j = 1; j <= ly.m; ++j) {
      const long sy = ly.slot_y(j);
      const long dx = ly.lane_dx(j);
      const VertexId xe = p + ".x" + std::to_string(j);
      const VertexId ne = p + ".nx" + std::to_string(j);
      add(xe, ax + s * dx, sy);
      add(ne, ax - s * dx, sy);
      remember(xe);
      remember(ne);
      const std::string key = std::to_string(i) + ":" + std::to_string(j);
      lg.roles["variable-endpoint:" + key] = {xe};
      lg.roles["negated-endpoint:" + key] = {ne};
      // Four pairwise non-parallel blocking edges per endpoint, slopes
      // +-1/dx and +-2/dx: never horizontal or vertical.
      for (long off : {-2L, -1L, 1L, 2L}) {
        edge(xe, wall_at(wallA, sy + off));
        edge(ne, wall_at(wallB, sy + off));
        role_add("endpoint-anchors:" + key + ":x", wall_at(wallA, sy + off));
        role_add("endpoint-anchors:" + key + ":nx", wall_at(wallB, sy + off));
      }
    }
    for (int j = 1; j + 1 <= ly.m; ++j) {
      const long lo = ly.corridor_lo(j), hi = ly.corridor_hi(j);
      for (char side : {'A', 'B'}) {
        const int wall_s = (side == 'A') ? s : -s;
        const long px = ax + wall_s * ly.post_dx();
        const auto& wall = (side == 'A') ? wallA : wallB;
        const std::string pv = p + ".p" + side + ".";
        add(pv + std::to_string(lo), px, lo);
        add(pv + std::to_string(lo + 1), px, lo + 1);
        add(pv + std::to_string(hi), px, hi);
        remember(pv + std::to_string(lo));
        remember(pv + std::to_string(lo + 1));
        remember(pv + std::to_string(hi));
        edge(wall_at(wall, lo), pv + std::to_string(lo));
        edge(wall_at(wall, hi), pv + std::to_string(hi));
        edge(pv + std::to_string(lo), pv + std::to_string(lo + 1));
        edge(pv + std::to_string(lo + 1), pv + std::to_string(hi));
        const std::string ckey = "corridor-boundary:" + std::to_string(i) + ":" +
                                 std::to_string(j) + ":" + side;
        lg.roles[ckey] = {wall_at(wall, lo), wall_at(wall, hi), pv + std::to_string(lo),
                          pv + std::to_string(lo + 1), pv + std::to_string(hi)};
      }
    }
  }

  if (is_dummy) {
    lg.roles["dummy-tower:" + std::string(t == 0 ? "0" : "1")] = members;
  } else {
    lg.roles["tower:" + std::to_string(t)] = members;
  }
}

void Builder::build_connector_lines() {
  for (int t = 0; t <= ly.n; ++t) {
    const std::string a = "t" + std::to_string(t);
    const std::string b = "t" + std::to_string(t + 1);
    edge(a + ".cnA", b + ".cnA");
    edge(a + ".cnB", b + ".cnB");
  }
}

void Builder::build_vertical_skeleton() {
  const long xv = ly.vspine_x();
  auto sk = [&](const VertexId& v, long x, long y) {
    add(v, x, y);
    skeleton_v.push_back(v);
  };
  sk("sk.v.top", xv, 8);
  sk("sk.v.hl", xv, 6);
  sk("sk.v.s1", xv, -2);
  sk("sk.v.s2", xv, -4);
  for (int j = 1; j <= ly.m; ++j) sk("sk.v.a" + std::to_string(j), xv, ly.hub_y(j) + 3);
  sk("sk.v.s3", xv, -12L * ly.m - 6);
  sk("sk.v.s4", xv, -12L * ly.m - 8);
  // Spine chain, top to bottom.
  VertexId prev = "sk.v.top";
  auto chain = [&](const VertexId& v) {
    edge(prev, v);
    prev = v;
  };
  chain("sk.v.hl");
  chain("sk.v.s1");
  chain("sk.v.s2");
  for (int j = 1; j <= ly.m; ++j) chain("sk.v.a" + std::to_string(j));
  chain("sk.v.s3");
  chain("sk.v.s4");

  // The horizontal long edge and the toplink joining the two parts.
  edge("sk.h.hlt", "sk.v.hl");   // crosses sk.h.vl--sk.h.vlt at the grid point
  edge("sk.h.vlt", "sk.v.top");

  // Vertical rails crossed perpendicularly by every clause path run.
  sk("sk.v.r1t", ly.vr1_x(), -2);
  sk("sk.v.r1b", ly.vr1_x(), -12L * ly.m - 8);
  sk("sk.v.r2t", ly.vr2_x(), -4);
  sk("sk.v.r2b", ly.vr2_x(), -12L * ly.m - 6);
  edge("sk.v.r1t", "sk.v.r1b");
  edge("sk.v.r2t", "sk.v.r2b");
  edge("sk.v.r1t", "sk.v.s1");
  edge("sk.v.r1b", "sk.v.s4");
  edge("sk.v.r2t", "sk.v.s2");
  edge("sk.v.r2b", "sk.v.s3");
}

void Builder::build_clause(int j) {
  const std::string c = "c" + std::to_string(j);
  const long hy = ly.hub_y(j);
  const long lx = ly.trap_left_x(), rx = ly.trap_right_x(), hx = ly.hub_x();

  add(c + ".ltT", lx, hy + 3);
  add(c + ".ltB", lx, hy - 3);
  add(c + ".rtT", rx, hy + 3);
  add(c + ".rtB", rx, hy - 3);
  edge(c + ".ltT", c + ".ltB");  // trapping parallel pair
  edge(c + ".rtT", c + ".rtB");
  edge(c + ".ltT", c + ".rtT");  // crossbars closing the valve chamber
  edge(c + ".ltB", c + ".rtB");
  lg.roles["clause-trap:" + std::to_string(j)] = {c + ".ltT", c + ".ltB", c + ".rtT",
                                                  c + ".rtB"};

  add(c + ".h", hx, hy);
  add(c + ".k", hx + 1, hy);
  edge(c + ".h", c + ".k");
  edge(c + ".k", c + ".rtB");
  lg.roles["clause-hub:" + std::to_string(j)] = {c + ".h", c + ".k"};

  // Endpoint vertices; their drawn positions (trapped / escaped) are decided
  // by the assignment at synthesis time.
  static const char* kSlotNames[3] = {"top", "bottom", "right"};
  for (int l = 0; l < 3; ++l) {
    const VertexId e = c + ".e" + std::to_string(l);
    lg.graph.add_vertex(e);
    edge(c + ".h", e);
    lg.roles["clause-endpoint:" + std::to_string(j) + ":" + kSlotNames[l]] = {e};
  }

  edge(c + ".rtT", "sk.v.a" + std::to_string(j));  // anchor to the vertical spine

  // One antiprism unit per clause band, strutted off the spine.
  const UnitNames su = unit("s" + std::to_string(j), ly.band_unit_cx(), hy, 1);
  edge(su.o1, "sk.v.a" + std::to_string(j));
  for (const auto& v : {su.c, su.o0, su.o1, su.o2, su.o3, su.i0, su.i1, su.i2, su.i3}) {
    skeleton_v.push_back(v);
  }
}

void Builder::build_paths(int j) {
  const Clause& cl = f.clauses[j - 1];
  const std::string c = "c" + std::to_string(j);

  // Drawing-time routing: the true literal with the lowest variable index
  // stays trapped; the remaining two escape through the crossbars.
  int trapped = -1;
  if (placing()) {
    for (int l = 0; l < 3; ++l) {
      if (literal_true(cl[l], *assignment)) {
        if (trapped < 0 || cl[l].var < cl[trapped].var) trapped = l;
      }
    }
    if (trapped < 0) {
      throw UnsatAssignment("clause " + std::to_string(j) + " unsatisfied by the assignment");
    }
  }

  const long hy = ly.hub_y(j);
  const long hx = ly.hub_x();
  int escape = 0;  // 0: up, 1: down
  for (int l = 0; l < 3; ++l) {
    const Literal& lit = cl[l];
    const VertexId ep = c + ".e" + std::to_string(l);
    const VertexId mid = "p" + std::to_string(j) + "." + std::to_string(l);
    const std::string tv = "t" + std::to_string(lit.var);
    const VertexId var_ep =
        lit.negated ? tv + ".nx" + std::to_string(j) : tv + ".x" + std::to_string(j);

    long run_y = 0;
    if (placing()) {
      if (l == trapped) {
        dr.positions[ep] = Point{Rational(hx - 1), Rational(hy)};
        run_y = hy;
      } else {
        const bool up = (escape++ == 0);
        dr.positions[ep] =
            Point{Rational(hx), Rational(up ? hy + 5 : hy - 5)};
        run_y = up ? hy + 5 : hy - 5;
      }
      const int sv = side_sign(lit.var);
      const long riser_x =
          ly.ax(lit.var) + (lit.negated ? -sv : sv) * ly.lane_dx(j);
      dr.positions[mid] = Point{Rational(riser_x), Rational(run_y)};
    }
    lg.graph.add_vertex(mid);
    edge(ep, mid);       // horizontal run through the vertical-part rails
    edge(mid, var_ep);   // vertical riser threading tower corridors
    lg.roles["path-mid:" + std::to_string(j) + ":" + std::to_string(l)] = {mid};
  }
}

void Builder::build() {
  build_horizontal_skeleton();
  for (int t = 0; t <= ly.n + 1; ++t) build_tower(t);
  build_connector_lines();
  build_vertical_skeleton();
  for (int j = 1; j <= ly.m; ++j) build_clause(j);
  for (int j = 1; j <= ly.m; ++j) build_paths(j);
  lg.roles["skeleton-part:horizontal"] = skeleton_h;
  lg.roles["skeleton-part:vertical"] = skeleton_v;
  lg.validate_roles();
}

}  // namespace

CompileResult compile(const CnfFormula& f) {
  Builder b(f, nullptr);
  b.build();
  CompileResult out;
  out.graph = std::move(b.lg);
  out.labels = GadgetLabels::from_roles(out.graph.roles);
  return out;
}

Drawing synthesize_drawing(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_variables) {
    throw InvalidParameter("assignment length does not match variable count");
  }
  if (!satisfies(f, a)) throw UnsatAssignment("assignment does not satisfy the formula");
  Builder b(f, &a);
  b.build();
  Drawing d = std::move(b.dr);
  d.graph = std::move(b.lg.graph);
  d.validate();
  return d;
}

}  // namespace racforge
