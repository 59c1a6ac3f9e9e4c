import { describe, expect, it } from 'vitest';

import {
  FORWARD_STATES,
  projectView,
  renderCompletionMatrix,
  renderDashboard,
  renderFinancial,
  renderRanking,
  renderTimeline,
} from '../src/dashboard.js';
import { rawParse } from '../src/rawJson.js';
import { contextList } from '../src/wizard.js';
import { fixtureText, numberLexeme, numberLexemes } from './helpers.js';

// Recorded wire bytes from a full evaluation run: the project snapshot
// after award, the snapshot during judgment collection, and the context
// listing used to lay out the completion matrix.
const AWARDED = fixtureText('snapshot-awarded.json');
const COLLECTING = fixtureText('snapshot-collection.json');
const CONTEXT_IDS = contextList(rawParse(fixtureText('contexts.json'))).map(
  (ctx) => ctx.contextId,
);

describe('awarded project dashboard (recorded snapshot)', () => {
  const view = projectView(rawParse(AWARDED));
  const html = renderDashboard(view, CONTEXT_IDS);

  it('names the winner in the award banner', () => {
    expect(html).toContain('<div class="award-banner">Contract awarded to Contractor 5</div>');
  });

  it('marks the final stage as current and the rest as done', () => {
    expect(view.state).toBe('Awarded');
    for (const stage of FORWARD_STATES.slice(0, -1)) {
      expect(html).toContain(`<li class="stage done">${stage}</li>`);
    }
    expect(html).toContain('<li class="stage current">Awarded</li>');
  });

  it('shows the screening cutoff byte-identical to the wire', () => {
    const sigma = numberLexeme(AWARDED, 'sigma');
    expect(sigma).toBe('0.0049590353762631835');
    expect(html).toContain(`&sigma; = ${sigma}`);
  });

  it('shows every ranking weight byte-identical to the wire', () => {
    // "weight" appears exactly once per ranking row in the snapshot
    const weights = numberLexemes(AWARDED, 'weight');
    expect(weights).toHaveLength(9);
    expect(weights[0]).toBe('0.009918070752526367');
    for (const weight of weights) {
      expect(html).toContain(`<td>${weight}</td>`);
    }
  });

  it('shows per-expert weights byte-identical to the wire', () => {
    // spot-check one recorded per-expert weight straight from the bytes
    const dm1Block = AWARDED.slice(AWARDED.indexOf('"alternative_weights"'));
    const lexeme = numberLexeme(dm1Block, 'Contractor 1');
    expect(lexeme).toBe('0.00854668403175542');
    expect(html).toContain(`<td>${lexeme}</td>`);
  });

  it('greys exactly the contractors the service screened out', () => {
    expect(view.technical!.screenedOut).toEqual(['Contractor 2', 'Contractor 7']);
    const screenedRows = html.match(/<tr class="screened-out">.*?<\/tr>/gs) ?? [];
    expect(screenedRows).toHaveLength(2);
    expect(screenedRows.join('')).toContain('Contractor 2');
    expect(screenedRows.join('')).toContain('Contractor 7');
    expect(screenedRows.join('')).not.toContain('Contractor 4');
    expect(html).toContain('screened out');
  });

  it('shows money amounts exactly as the service formatted them', () => {
    expect(html).toContain('141,565,965.72');
    expect(html).toContain('-1,468,495.12');
    expect(html).toContain('143,034,460.84');
  });

  it('keeps the financial rows in service order', () => {
    const best = html.indexOf('141,565,965.72');
    expect(best).toBeGreaterThan(-1);
    expect(view.financial!.rows[0]!.bid).toBe('141,565,965.72');
    expect(view.financial!.winner).toBe('Contractor 5');
  });

  it('shows each submission consistency ratio byte-identical to the wire', () => {
    // per-expert submission cells carry their CR; every recorded lexeme
    // must surface somewhere in the completion matrix
    const ratios = new Set(numberLexemes(AWARDED, 'consistency_ratio'));
    for (const ratio of ratios) {
      expect(html).toContain(`CR ${ratio}`);
    }
  });
});

describe('collection-stage dashboard (recorded snapshot)', () => {
  const view = projectView(rawParse(COLLECTING));
  const html = renderDashboard(view, CONTEXT_IDS);

  it('walks the timeline up to judgment collection', () => {
    expect(html).toContain('<li class="stage done">Setup</li>');
    expect(html).toContain('<li class="stage done">Prescreening</li>');
    expect(html).toContain('<li class="stage current">JudgmentCollection</li>');
    expect(html).toContain('<li class="stage pending">TechnicalRanking</li>');
    expect(html).toContain('<li class="stage pending">Awarded</li>');
  });

  it('has no ranking or financial section yet', () => {
    expect(view.technical).toBeNull();
    expect(view.financial).toBeNull();
    expect(html).not.toContain('ranking-table');
    expect(html).not.toContain('award-banner');
  });

  it('shows the one recorded submission and leaves the rest pending', () => {
    const matrix = renderCompletionMatrix(view, CONTEXT_IDS);
    const ratio = numberLexeme(COLLECTING, 'consistency_ratio');
    expect(matrix).toContain(`complete (attempt 1) <span class="cell-ratio">CR ${ratio}</span>`);
    const pending = matrix.match(/submission pending/g) ?? [];
    // 20 contexts x 4 experts, one cell filled
    expect(pending).toHaveLength(20 * 4 - 1);
  });
});

describe('timeline states', () => {
  it('renders all eight forward stages', () => {
    const html = renderTimeline('Setup');
    for (const stage of FORWARD_STATES) {
      expect(html).toContain(stage);
    }
    expect(html).toContain('<li class="stage current">Setup</li>');
  });

  it('marks everything pending when cancelled', () => {
    const html = renderTimeline('Cancelled');
    expect(html).toContain('This project was cancelled.');
    expect(html.match(/stage pending/g)).toHaveLength(FORWARD_STATES.length);
  });
});

describe('view extraction details', () => {
  it('reads tied offers and winner from the financial section only', () => {
    const financial = projectView(rawParse(AWARDED)).financial!;
    expect(financial.tied).toEqual([]);
    const block = renderFinancial(financial, financial.estimate);
    expect(block).toContain('Contract awarded to Contractor 5');
  });

  it('renders an em dash for experts without a recorded weight', () => {
    const technical = projectView(rawParse(AWARDED)).technical!;
    const trimmed = {
      ...technical,
      decisionMakers: [...technical.decisionMakers, 'DM9'],
    };
    expect(renderRanking(trimmed)).toContain('&mdash;');
  });
});
