#!/usr/bin/env python3
"""Writes the benchmark models and problems under benchmarks/."""

import argparse
import json
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def num(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Model:
    def __init__(self, name, variables, header):
        self.name = name
        self.variables = variables
        self.header = header
        self.locations = []
        self.transitions = []
        self.init = None

    def location(self, name, inv="true", **rates):
        self.locations.append((name, inv, rates))

    def trans(self, src, dst, label, guard="true", **resets):
        self.transitions.append((src, dst, label, guard, resets))

    def text(self):
        out = [f"# {line}".rstrip() for line in self.header.strip().splitlines()]
        out += ["", f"automaton {self.name};", f"vars {', '.join(self.variables)};", ""]
        for name, inv, rates in self.locations:
            body = [] if inv == "true" else [f"  inv: {inv};"]
            for v in self.variables:
                lo, hi = rates.get(v, (0, 0))
                body.append(f"  rate {v} in [{num(lo)}, {num(hi)}];")
            out.append(f"location {name} {{")
            out += body
            out.append("}")
        out.append("")
        for src, dst, label, guard, resets in self.transitions:
            out.append(f"trans {src} -> {dst} {{")
            out.append(f"  label: {label};")
            if guard != "true":
                out.append(f"  guard: {guard};")
            for v, value in resets.items():
                out.append(f"  reset {v} := {num(value)};")
            out.append("}")
        loc, region = self.init
        out += ["", f"init {loc} {{ {region}; }}", ""]
        return "\n".join(out)


def problem_text(name, goal, depth, goal_region=None):
    region = f" {{ {goal_region}; }}" if goal_region else ";"
    return f'problem {name};\nmodel "model.lha";\ngoal {goal}{region}\ndepth {depth} locations;\n'


def grid_neighbours(rows, cols, cell):
    r, c = divmod(cell - 1, cols)
    for dr, dc, label in ((-1, 0, "north"), (1, 0, "south"), (0, -1, "west"), (0, 1, "east")):
        rr, cc = r + dr, c + dc
        if 0 <= rr < rows and 0 <= cc < cols:
            yield rr * cols + cc + 1, label


def grid_model(name, rows, cols, blocked, init, battery, depletion, header, rate_overrides=None, charger=None):
    """Cells are locations loc1..locN in row-major order. b is the battery, c
    the time spent in the current cell; leaving a cell takes at least one time
    unit. Blocked cells are locations without transitions."""
    rate_overrides = rate_overrides or {}
    m = Model(name, ["b", "c"], header)
    for cell in range(1, rows * cols + 1):
        if cell == charger:
            m.location(f"loc{cell}", f"0 <= b <= {battery}", b=(0, 2), c=(1, 1))
            continue
        r = rate_overrides.get(cell, depletion)
        m.location(f"loc{cell}", f"0 <= b <= {battery}", b=(-r, -r), c=(1, 1))
    for cell in range(1, rows * cols + 1):
        if cell in blocked:
            continue
        for other, label in grid_neighbours(rows, cols, cell):
            if other not in blocked:
                m.trans(f"loc{cell}", f"loc{other}", label, "c >= 1", c=0)
    m.init = (f"loc{init}", f"b = {battery} & c = 0")
    return m


def rover():
    blocked = {4, 7, 9, 12, 18, 22}
    header = """
Planetary rover on a 5x5 grid of cells loc1..loc25, numbered row by row.
The rover starts in loc11 with a full battery of 10 units and must reach the
base station in loc25. Every cell takes at least one time unit to cross.
The battery drains 1 unit per time unit, 2 in the sampling cells loc1 and
loc14 and 3 in the inclined cells loc3 and loc8.
Cells loc4, loc7, loc9, loc12, loc18 and loc22 are impassable; this blocked
set is the one under which exactly 3 walks reach loc25 within 12 locations.
"""
    return grid_model("planetary_rover", 5, 5, blocked, 11, 10, 1, header, {1: 2, 14: 2, 3: 3, 8: 3})


def warehouse_6x6():
    blocked = {4, 11, 13, 14, 21, 35, 36}
    header = """
Warehouse robot on a 6x6 grid of cells loc1..loc36, numbered row by row.
The robot starts in loc5 with 10 units of charge and must deliver to loc19.
Every cell takes at least one time unit and drains 2 units per time unit;
the oil-spill cells loc23 and loc29 drain 3. loc10 is the charging station.
Cells loc4, loc11, loc13, loc14, loc21, loc35 and loc36 are blocked. The
layout reproduces 12 walks within 12 locations and 5816 within 17.
"""
    return grid_model("warehouse_6x6", 6, 6, blocked, 5, 10, 2, header, {23: 3, 29: 3}, charger=10)


def warehouse_10x10():
    blocked = {2, 6, 10, 15, 16, 18, 25, 31, 34, 36, 38, 40, 41, 46, 47, 50, 51, 64, 67, 68, 75, 77, 80, 86, 88, 89,
               90, 92, 96, 97}
    header = """
Warehouse robot on a 10x10 grid of cells loc1..loc100, numbered row by row.
The robot starts in loc83 with 12 units of charge and must deliver to loc39.
Every cell takes at least one time unit and drains 2 units per time unit.
loc1 is the charging station, out of reach of the initial charge.
The blocked set reproduces 2 walks within 12 locations, 78 within 15 and
178 transitions.
"""
    return grid_model("warehouse_10x10", 10, 10, blocked, 83, 12, 2, header, charger=1)


def nav():
    header = """
Point robot in the unit-square cells of a 3x3 grid, loc1..loc9 row by row;
cell locK covers col <= x <= col + 1, row <= y <= row + 1 for
K = 3 * row + col + 1. Neighbouring cells are joined in both directions
through their shared edge, giving 24 transitions.
In the left column the vector field pushes x down (dx in [-1, -1/4]) so the
robot, started there, can never cross to the middle column; loc6, the goal,
is therefore unreachable.
"""
    m = Model("nav", ["x", "y"], header)
    fields = {0: ((-1, Fraction(-1, 4)), (-1, 1)), 1: ((Fraction(1, 4), 1), (-1, 1)), 2: ((-1, 1), (-1, 1))}
    for cell in range(1, 10):
        row, col = divmod(cell - 1, 3)
        dx, dy = fields[col]
        inv = f"{col} <= x <= {col + 1} & {row} <= y <= {row + 1}"
        m.location(f"loc{cell}", inv, x=dx, y=dy)
    for cell in range(1, 10):
        row, col = divmod(cell - 1, 3)
        for other, label in grid_neighbours(3, 3, cell):
            orow, ocol = divmod(other - 1, 3)
            if orow != row:
                guard = f"y = {max(row, orow)}"
            else:
                guard = f"x = {max(col, ocol)}"
            m.trans(f"loc{cell}", f"loc{other}", label, guard)
    m.init = ("loc1", "1/4 <= x <= 3/4 & 1/4 <= y <= 3/4")
    return m


def water_level_monitor():
    header = """
Water-level monitor. w is the water level, x the controller clock.
loc1 starts the system; loc2..loc5 cycle through pump on, switch-off delay,
pump off and switch-on delay (the level rises 1 per time unit with the pump
on and falls 2 with it off, each switch taking 2 time units); loc6 is the
overflow state, entered from loc2 once w >= 12. The invariant w <= 10 of
loc2 makes it unreachable.
"""
    m = Model("water_level_monitor", ["w", "x"], header)
    m.location("loc1", "x <= 0")
    m.location("loc2", "w <= 10", w=(1, 1), x=(1, 1))
    m.location("loc3", "x <= 2", w=(1, 1), x=(1, 1))
    m.location("loc4", "w >= 5", w=(-2, -2), x=(1, 1))
    m.location("loc5", "x <= 2", w=(-2, -2), x=(1, 1))
    m.location("loc6")
    m.trans("loc1", "loc2", "start")
    m.trans("loc2", "loc3", "switch_off", "w = 10", x=0)
    m.trans("loc3", "loc4", "pump_off", "x = 2")
    m.trans("loc4", "loc5", "switch_on", "w = 5", x=0)
    m.trans("loc5", "loc2", "pump_on", "x = 2")
    m.trans("loc2", "loc6", "overflow", "w >= 12")
    m.init = ("loc1", "w = 1 & x = 0")
    return m


NRS_ARCS = [(0, 18), (0, 19), (1, 0), (1, 24), (2, 12), (3, 17), (5, 18), (6, 1), (7, 22), (9, 8), (9, 16), (12, 18),
            (13, 1), (14, 4), (15, 12), (17, 16), (18, 25), (18, 26), (19, 1), (20, 25), (21, 2), (23, 10), (23, 17),
            (23, 21), (24, 6), (24, 13), (24, 18), (25, 5), (25, 12), (26, 24)]


def nuclear_reactor():
    header = """
Nuclear reactor with two control rods, flattened to 27 control locations
loc1..loc27 joined by 30 transitions. t is the core temperature and c the
rod recovery clock. Every location other than the unsafe state loc25 keeps
t within [510, 550]; the transitions into loc25 require t >= 560, so the
unsafe state is unreachable. The transition relation is a reconstruction
fixed by the walk counts 312 within 15 locations and 7812 within 20.
"""
    m = Model("nuclear_reactor", ["t", "c"], header)
    for k in range(27):
        if k == 24:
            m.location("loc25", "true", t=(-1, 1), c=(1, 1))
        else:
            rate = (1, 2) if k % 2 == 0 else (-2, -1)
            m.location(f"loc{k + 1}", "510 <= t <= 550", t=rate, c=(1, 1))
    for u, v in NRS_ARCS:
        if v == 24:
            m.trans(f"loc{u + 1}", f"loc{v + 1}", f"fail_{u + 1}", "t >= 560")
        else:
            m.trans(f"loc{u + 1}", f"loc{v + 1}", f"step_{u + 1}_{v + 1}", "c >= 1", c=0)
    m.init = ("loc1", "t = 510 & c = 0")
    return m


BENCHMARKS = {
    "planetary_rover": (rover, "loc25", [12, 20]),
    "warehouse_6x6": (warehouse_6x6, "loc19", [12, 17]),
    "warehouse_10x10": (warehouse_10x10, "loc39", [12, 15]),
    "water_level_monitor": (water_level_monitor, "loc6", [20, 50]),
    "nav": (nav, "loc6", [10, 15]),
    "nuclear_reactor": (nuclear_reactor, "loc25", [15, 20]),
}

GOAL_REGIONS = {
    "planetary_rover": "b >= 0",
    "warehouse_6x6": "b >= 0",
    "warehouse_10x10": "b >= 0",
    "nav": "x >= 5/2 & y >= 3/2",
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=ROOT / "benchmarks")
    args = parser.parse_args()
    for name, (build, goal, depths) in BENCHMARKS.items():
        directory = args.out / name
        directory.mkdir(parents=True, exist_ok=True)
        (directory / "model.lha").write_text(build().text())
        for depth in depths:
            text = problem_text(f"{name}_d{depth}", goal, depth, GOAL_REGIONS.get(name))
            (directory / f"depth{depth}.prob").write_text(text)
    print(json.dumps(sorted(BENCHMARKS)))


if __name__ == "__main__":
    main()
