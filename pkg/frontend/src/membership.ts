/** Piecewise-linear membership evaluation over the model payload.
 *
 * Used only for slider badges and band shading. Scores are never
 * computed here; they always come back from the service.
 */
import type { Breakpoints, VariablePayload } from './types.js';

/** Linear interpolation with constant extension outside the breakpoints. */
export function membershipAt(breakpoints: Breakpoints, x: number): number {
  if (breakpoints.length === 0) return 0;
  if (x <= breakpoints[0][0]) return breakpoints[0][1];
  const last = breakpoints[breakpoints.length - 1];
  if (x >= last[0]) return last[1];
  for (let i = 1; i < breakpoints.length; i++) {
    const [x1, m1] = breakpoints[i - 1];
    const [x2, m2] = breakpoints[i];
    if (x === x2) return m2;
    if (x < x2) {
      return m1 + ((m2 - m1) * (x - x1)) / (x2 - x1);
    }
  }
  return last[1];
}

export interface TermDegree {
  term: string;
  degree: number;
}

/** All positive term degrees at x, in the variable's term order. */
export function activeTerms(variable: VariablePayload, x: number): TermDegree[] {
  const out: TermDegree[] = [];
  for (const [term, shape] of Object.entries(variable.terms)) {
    const degree = membershipAt(shape.breakpoints, x);
    if (degree > 0) out.push({ term, degree });
  }
  return out;
}

/** Badge text such as "No 0.50 / Partial 0.50". */
export function badgeText(variable: VariablePayload, x: number): string {
  return activeTerms(variable, x)
    .map(({ term, degree }) => `${term} ${degree.toFixed(2)}`)
    .join(' / ');
}

/**
 * CSS gradient stops shading the scale by the dominant term at each point.
 * Sampled at each term's breakpoints, which is where dominance can change.
 */
export function bandGradient(
  variable: VariablePayload,
  colors: Record<string, string>,
  fallback = '#ddd',
): string {
  const [lo, hi] = variable.universe;
  const xs = new Set<number>([lo, hi]);
  for (const shape of Object.values(variable.terms)) {
    for (const [x] of shape.breakpoints) xs.add(x);
  }
  const sorted = [...xs].sort((a, b) => a - b);
  const stops: string[] = [];
  for (let i = 1; i < sorted.length; i++) {
    const mid = (sorted[i - 1] + sorted[i]) / 2;
    let best = fallback;
    let bestDegree = 0;
    for (const [term, shape] of Object.entries(variable.terms)) {
      const degree = membershipAt(shape.breakpoints, mid);
      if (degree > bestDegree) {
        bestDegree = degree;
        best = colors[term] ?? fallback;
      }
    }
    const from = (((sorted[i - 1] - lo) / (hi - lo)) * 100).toFixed(1);
    const to = (((sorted[i] - lo) / (hi - lo)) * 100).toFixed(1);
    stops.push(`${best} ${from}% ${to}%`);
  }
  return `linear-gradient(to right, ${stops.join(', ')})`;
}
