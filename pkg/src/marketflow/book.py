"""Order book state and the matching rule applied to incoming agents.

The book holds exactly ten price levels per side. An incoming agent
either rests in the book (passive) or trades against the best opposite
level (active). Fills are capped at that single level: a full fill
removes it, the side regenerates one far-end level, and any residual
agent size rests passively on the traded side's new best level.

Every mutation is journaled so the final state can be reconciled
bit-exactly against a replay of the journal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .config import SimConfig
from .physics import size_at


class Side(Enum):
    BUY = "buy"
    SELL = "sell"

    @property
    def other(self) -> "Side":
        return Side.SELL if self is Side.BUY else Side.BUY


@dataclass
class PriceLevel:
    price: int
    size: float


@dataclass
class FluidAgent:
    """One incoming financial agent: side, integer price, positive size."""

    side: Side
    price: int
    size: float


@dataclass
class InteractionOutcome:
    """What one agent did to the book.

    Notionals are captured from the pre-trade state: the obstacle is the
    best opposite level, the order is the agent itself.
    """

    traded_volume: float
    price_change: float
    spread_before: int
    obstacle_notional: float
    order_notional: float
    collision: bool


class OrderBook:
    """Ten buy levels (descending price) and ten sell levels (ascending).

    Level sizes are stateful reals: passive orders add to them, partial
    fills shrink them, full fills delete them. The journal records each
    of those float operations in order.
    """

    def __init__(self, buy_levels: list[PriceLevel], sell_levels: list[PriceLevel],
                 m: float, h: float):
        self.m = m
        self.h = h
        self._prices = {
            Side.BUY: [lv.price for lv in buy_levels],
            Side.SELL: [lv.price for lv in sell_levels],
        }
        self._sizes = {
            Side.BUY: {lv.price: lv.size for lv in buy_levels},
            Side.SELL: {lv.price: lv.size for lv in sell_levels},
        }
        self.journal: list[tuple[str, Side, int, float]] = []
        for side in (Side.BUY, Side.SELL):
            for p in self._prices[side]:
                self.journal.append(("init", side, p, self._sizes[side][p]))

    @property
    def bid(self) -> int:
        return self._prices[Side.BUY][0]

    @property
    def ask(self) -> int:
        return self._prices[Side.SELL][0]

    @property
    def spread(self) -> int:
        return self.ask - self.bid

    @property
    def mid(self) -> float:
        return (self.bid + self.ask) / 2.0

    def prices(self, side: Side) -> list[int]:
        return list(self._prices[side])

    def levels(self, side: Side) -> list[PriceLevel]:
        return [PriceLevel(p, self._sizes[side][p]) for p in self._prices[side]]

    def size_of(self, side: Side, price: int) -> float:
        return self._sizes[side][price]

    def has_level(self, side: Side, price: int) -> bool:
        return price in self._sizes[side]

    def total_size(self, side: Side) -> float:
        return sum(self._sizes[side].values())

    # --- journaled mutations -------------------------------------------

    def add_size(self, side: Side, price: int, amount: float, tag: str) -> None:
        self._sizes[side][price] += amount
        self.journal.append((tag, side, price, amount))

    def take_size(self, side: Side, price: int, amount: float) -> None:
        self._sizes[side][price] -= amount
        self.journal.append(("trade", side, price, amount))

    def consume_best(self, side: Side) -> float:
        """Remove the best level of a side entirely; returns its size."""
        price = self._prices[side][0]
        size = self._sizes[side].pop(price)
        self._prices[side].pop(0)
        self.journal.append(("consume", side, price, size))
        return size

    def append_far(self, side: Side, price: int, size: float) -> None:
        self._prices[side].append(price)
        self._sizes[side][price] = size
        self.journal.append(("regen", side, price, size))

    # --- invariants -----------------------------------------------------

    def check(self) -> None:
        for side in (Side.BUY, Side.SELL):
            ps = self._prices[side]
            if len(ps) != 10:
                raise AssertionError(f"{side.value} side holds {len(ps)} levels, want 10")
            ordered = all(a > b for a, b in zip(ps, ps[1:])) if side is Side.BUY \
                else all(a < b for a, b in zip(ps, ps[1:]))
            if not ordered:
                raise AssertionError(f"{side.value} levels out of order")
            for p in ps:
                if not self._sizes[side][p] > 0:
                    raise AssertionError(f"non-positive size at {side.value} {p}")
        if self.bid >= self.ask:
            raise AssertionError("book is crossed")


def init_book(config: SimConfig) -> OrderBook:
    """Build the starting book: ten contiguous levels per side around the
    configured bid and spread, sized by the kernel at those anchors."""
    if config.initial_bid < 1:
        raise ValueError("initial_bid must be >= 1")
    if config.initial_spread < 1:
        raise ValueError("initial_spread must be >= 1")
    bid = config.initial_bid
    ask = bid + config.initial_spread
    buys = [PriceLevel(bid - i, size_at(bid - i, bid, ask, config.m, config.h))
            for i in range(10)]
    sells = [PriceLevel(ask + i, size_at(ask + i, bid, ask, config.m, config.h))
             for i in range(10)]
    return OrderBook(buys, sells, config.m, config.h)


def regenerate_levels(book: OrderBook, side: Side, m: float, h: float) -> OrderBook:
    """Append one far-end level after a full-fill removal left nine.

    The new price sits one tick beyond the side's current farthest and
    its size is the kernel value at the current bid/ask anchors.
    """
    ps = book.prices(side)
    if len(ps) != 9:
        raise ValueError(f"regeneration expects 9 levels, found {len(ps)}")
    new_price = ps[-1] - 1 if side is Side.BUY else ps[-1] + 1
    book.append_far(side, new_price, size_at(new_price, book.bid, book.ask, m, h))
    return book


def apply_order(book: OrderBook, agent: FluidAgent) -> InteractionOutcome:
    """Apply one agent to the book and report the interaction.

    Active means the agent's price is the opposite best quote; anything
    else rests passively on the agent's own side. A buy residual from a
    full fill rests on the sell side's new best level, a sell residual
    on the buy side's new best.
    """
    own = agent.side
    opp = own.other
    opposite_best = book.ask if own is Side.BUY else book.bid
    active = agent.price == opposite_best
    if not active and not book.has_level(own, agent.price):
        raise ValueError(
            f"{own.value} price {agent.price} is neither the opposite best "
            f"nor a resting {own.value} level")

    mid_before = book.mid
    spread_before = book.spread
    obstacle_size = book.size_of(opp, opposite_best)
    obstacle_notional = obstacle_size * opposite_best
    order_notional = agent.size * agent.price

    if not active:
        book.add_size(own, agent.price, agent.size, "passive")
        return InteractionOutcome(
            traded_volume=0.0, price_change=0.0, spread_before=spread_before,
            obstacle_notional=obstacle_notional, order_notional=order_notional,
            collision=False)

    if agent.size >= obstacle_size:
        volume = book.consume_best(opp)
        regenerate_levels(book, opp, book.m, book.h)
        residual = agent.size - volume
        if residual > 0.0:
            new_best = book.ask if opp is Side.SELL else book.bid
            book.add_size(opp, new_best, residual, "residual")
    else:
        volume = agent.size
        book.take_size(opp, opposite_best, volume)

    return InteractionOutcome(
        traded_volume=volume, price_change=book.mid - mid_before,
        spread_before=spread_before, obstacle_notional=obstacle_notional,
        order_notional=order_notional, collision=True)


@dataclass
class ReconcileReport:
    """Outcome of replaying the journal against the live book."""

    exact: bool
    initial: dict[Side, float]
    passive_added: dict[Side, float]
    residual_added: dict[Side, float]
    regen_added: dict[Side, float]
    traded_removed: dict[Side, float]
    identity_gap: dict[Side, float] = field(default_factory=dict)


def reconcile(book: OrderBook) -> ReconcileReport:
    """Replay the journal and compare with the live book.

    The replay repeats the same float operations in the same order, so
    `exact` demands bitwise equality of every level. The aggregate
    identity (initial + added - removed vs resting total) re-sums the
    same amounts in a different association and is reported as a gap,
    which is zero only up to float rounding.
    """
    sizes: dict[Side, dict[int, float]] = {Side.BUY: {}, Side.SELL: {}}
    agg = {name: {Side.BUY: 0.0, Side.SELL: 0.0}
           for name in ("init", "passive", "residual", "regen", "trade", "consume")}
    for op, side, price, amount in book.journal:
        agg[op][side] += amount
        if op in ("init", "regen"):
            sizes[side][price] = amount
        elif op in ("passive", "residual"):
            sizes[side][price] += amount
        elif op == "trade":
            sizes[side][price] -= amount
        elif op == "consume":
            del sizes[side][price]

    exact = all(
        sizes[side] == {p: book.size_of(side, p) for p in book.prices(side)}
        for side in (Side.BUY, Side.SELL))

    gap = {}
    for side in (Side.BUY, Side.SELL):
        expected = (agg["init"][side] + agg["passive"][side] + agg["residual"][side]
                    + agg["regen"][side] - agg["trade"][side] - agg["consume"][side])
        gap[side] = abs(book.total_size(side) - expected)

    removed = {s: agg["trade"][s] + agg["consume"][s] for s in (Side.BUY, Side.SELL)}
    return ReconcileReport(
        exact=exact, initial=agg["init"], passive_added=agg["passive"],
        residual_added=agg["residual"], regen_added=agg["regen"],
        traded_removed=removed, identity_gap=gap)
