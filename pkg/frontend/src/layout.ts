// Fixed circular placement: vertex 1 at the top, the rest clockwise.
// Nothing moves between renders, so screenshots are reproducible.

export interface Point {
  x: number;
  y: number;
}

export interface ArrowPath {
  from: number; // 1-based vertex numbers
  to: number;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export function vertexPositions(
  n: number,
  cx: number,
  cy: number,
  radius: number,
): Point[] {
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = -Math.PI / 2 + (2 * Math.PI * i) / n;
    points.push({
      x: cx + radius * Math.cos(angle),
      y: cy + radius * Math.sin(angle),
    });
  }
  return points;
}

// Read the arrows straight off the returned B: a positive entry b[i][j]
// means that many parallel arrows from vertex i+1 to vertex j+1.
export function arrowsFromB(b: number[][]): Array<[number, number, number]> {
  const arrows: Array<[number, number, number]> = [];
  for (let i = 0; i < b.length; i++) {
    for (let j = i + 1; j < b.length; j++) {
      const m = b[i][j];
      if (m > 0) arrows.push([i + 1, j + 1, m]);
      else if (m < 0) arrows.push([j + 1, i + 1, -m]);
    }
  }
  return arrows;
}

// Parallel edges fan out symmetrically around the center line.
export function parallelOffsets(multiplicity: number, gap = 10): number[] {
  const offsets: number[] = [];
  for (let t = 0; t < multiplicity; t++) {
    offsets.push((t - (multiplicity - 1) / 2) * gap);
  }
  return offsets;
}

// Shorten each segment so arrowheads stop at the vertex circle, and
// shift perpendicular by the parallel-edge offset.
export function arrowSegment(
  a: Point,
  b: Point,
  offset: number,
  vertexRadius: number,
): { x1: number; y1: number; x2: number; y2: number } {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len = Math.hypot(dx, dy) || 1;
  const ux = dx / len;
  const uy = dy / len;
  const px = -uy; // unit perpendicular
  const py = ux;
  const trim = vertexRadius + 4;
  return {
    x1: a.x + ux * trim + px * offset,
    y1: a.y + uy * trim + py * offset,
    x2: b.x - ux * trim + px * offset,
    y2: b.y - uy * trim + py * offset,
  };
}
