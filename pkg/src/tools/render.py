# src/tools/render.py
"""
Schematic SVG strips of cards.

Each card is drawn as a panel: left tracks down the left edge, right tracks
down the right edge (slot 1 at the top), and the hand as a circle at the
bottom. Carried groups run straight from their left track to their right
slot; the landing group runs into the hand and out to every slot it is
thrown to, labelled with the number of balls.
"""

import logging
import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Iterable, Optional, Sequence, Tuple

from src.core.cards import Card

logger = logging.getLogger(__name__)

PANEL_WIDTH = 140
PANEL_GAP = 16
ROW_HEIGHT = 26
TRACK_WIDTH = 28
TRACK_HEIGHT = 18
HAND_RADIUS = 11
MARGIN = 12
CAPTION_HEIGHT = 18

STROKE = "#333333"
CARRY = "#1f77b4"
THROW = "#d62728"

Point = Tuple[float, float]


def _track(parent: ET.Element, x: float, y: float, label: str) -> Point:
    """Rounded-rectangle track centred at (x, y); returns its centre"""
    ET.SubElement(
        parent,
        "rect",
        x=f"{x - TRACK_WIDTH / 2:.1f}",
        y=f"{y - TRACK_HEIGHT / 2:.1f}",
        width=str(TRACK_WIDTH),
        height=str(TRACK_HEIGHT),
        rx="6",
        ry="6",
        fill="white",
        stroke=STROKE,
    )
    text = ET.SubElement(
        parent,
        "text",
        x=f"{x:.1f}",
        y=f"{y + 4:.1f}",
        attrib={"text-anchor": "middle", "font-size": "11"},
    )
    text.text = label
    return x, y


def _out(p: Point) -> Point:
    return p[0] + TRACK_WIDTH / 2, p[1]


def _in(p: Point) -> Point:
    return p[0] - TRACK_WIDTH / 2, p[1]


def _line(parent: ET.Element, a: Point, b: Point, color: str) -> None:
    ET.SubElement(
        parent,
        "line",
        x1=f"{a[0]:.1f}",
        y1=f"{a[1]:.1f}",
        x2=f"{b[0]:.1f}",
        y2=f"{b[1]:.1f}",
        stroke=color,
        attrib={"stroke-width": "1.5"},
    )


def _rows(card: Card) -> int:
    return max(len(card.left), len(card.right), 1)


def panel_height(cards: Sequence[Card]) -> int:
    rows = max((_rows(c) for c in cards), default=1)
    return 2 * MARGIN + CAPTION_HEIGHT + rows * ROW_HEIGHT + 3 * HAND_RADIUS


def draw_card(parent: ET.Element, card: Card, x0: float, height: float) -> None:
    g = ET.SubElement(parent, "g", attrib={"class": "card"})
    left_x = x0 + TRACK_WIDTH / 2
    right_x = x0 + PANEL_WIDTH - TRACK_WIDTH / 2
    top = MARGIN + TRACK_HEIGHT / 2

    ET.SubElement(
        g,
        "rect",
        x=f"{x0:.1f}",
        y="0",
        width=str(PANEL_WIDTH),
        height=f"{height:.1f}",
        fill="none",
        stroke="#bbbbbb",
    )
    left = [
        _track(g, left_x, top + i * ROW_HEIGHT, str(p))
        for i, p in enumerate(card.left.parts)
    ]
    right = [
        _track(g, right_x, top + i * ROW_HEIGHT, str(p))
        for i, p in enumerate(card.right.parts)
    ]
    hand = (x0 + PANEL_WIDTH / 2, height - CAPTION_HEIGHT - 2 * HAND_RADIUS)
    ET.SubElement(
        g,
        "circle",
        cx=f"{hand[0]:.1f}",
        cy=f"{hand[1]:.1f}",
        r=str(HAND_RADIUS),
        fill="none",
        stroke=STROKE,
    )

    if card.is_trivial:
        for a, b in zip(left, right):
            _line(g, _out(a), _in(b), CARRY)
    elif left:
        for j, t in enumerate(card.indices, start=1):
            a, b = left[j], right[t - 1]
            _line(g, _out(a), _in(b), CARRY)
        _line(g, (left[0][0], left[0][1] + TRACK_HEIGHT / 2), hand, THROW)
        for t, thrown in enumerate(card.placement):
            if not thrown:
                continue
            b = right[t]
            _line(g, hand, _in(b), THROW)
            label = ET.SubElement(
                g,
                "text",
                x=f"{b[0] - TRACK_WIDTH / 2 - 8:.1f}",
                y=f"{b[1] + 12:.1f}",
                fill=THROW,
                attrib={"font-size": "9"},
            )
            label.text = str(thrown)

    caption = ET.SubElement(
        g,
        "text",
        x=f"{x0 + PANEL_WIDTH / 2:.1f}",
        y=f"{height - 6:.1f}",
        attrib={"text-anchor": "middle", "font-size": "10"},
    )
    caption.text = f"{card.left}→{card.right} c={card.crossings}"


def card_strip(cards: Iterable[Card]) -> ET.Element:
    """One <svg> with the cards laid out left to right"""
    cards = list(cards)
    height = panel_height(cards)
    width = max(len(cards), 1) * (PANEL_WIDTH + PANEL_GAP) + PANEL_GAP
    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(width),
        height=str(height),
        viewBox=f"0 0 {width} {height}",
    )
    for k, card in enumerate(cards):
        draw_card(svg, card, PANEL_GAP + k * (PANEL_WIDTH + PANEL_GAP), height)
    return svg


def render_cards(cards: Iterable[Card], path: Optional[str] = None) -> str:
    """Serialise the strip; also write it to `path` when given"""
    svg = card_strip(cards)
    ET.indent(svg)
    text = ET.tostring(svg, encoding="unicode")
    if path:
        out = Path(path)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text + "\n", encoding="utf-8")
        logger.info(f"Wrote {len(svg)} card panels to {out}")
    return text
