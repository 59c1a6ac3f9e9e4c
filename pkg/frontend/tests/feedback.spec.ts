import { describe, expect, it } from 'vitest';

import { renderFeedback, reportView } from '../src/feedback.js';
import { rawParse } from '../src/rawJson.js';
import { fixtureText, numberLexeme, numberLexemes, stringLexeme } from './helpers.js';

// Recorded wire bytes from real judgment submissions: one accepted
// matrix, one contradictory draft that came back with revision advice.
const ACCEPTED = fixtureText('judgment-accepted.json');
const DRAFT = fixtureText('judgment-draft.json');

describe('accepted judgment feedback (recorded response)', () => {
  const html = renderFeedback(reportView(rawParse(ACCEPTED)));

  it('shows the Acceptable banner from the accepted flag', () => {
    expect(html).toContain('<div class="feedback-banner accepted">Acceptable</div>');
    expect(html).not.toContain('Reject and modify');
  });

  it('repeats the service status line word for word', () => {
    expect(html).toContain('Since Consistency Ratio is &lt;= 0.1, Status: Acceptable');
  });

  it('shows every check quantity byte-identical to the wire', () => {
    for (const key of [
      'lambda_max',
      'consistency_index',
      'random_index',
      'consistency_ratio',
      'gamma',
    ]) {
      const lexeme = numberLexeme(ACCEPTED, key);
      expect(html).toContain(`<dd>${lexeme}</dd>`);
    }
    // the headline quantities, pinned against the exact recorded spelling
    expect(numberLexeme(ACCEPTED, 'lambda_max')).toBe('4.004239431578184');
    expect(numberLexeme(ACCEPTED, 'consistency_ratio')).toBe('0.0015701598437718373');
    expect(html).toContain('4.004239431578184');
    expect(html).toContain('0.0015701598437718373');
  });

  it('carries the identification and direction tags', () => {
    expect(html).toContain(stringLexeme(ACCEPTED, 'identification'));
    expect(html).toContain(stringLexeme(ACCEPTED, 'direction'));
  });

  it('renders no revision hints', () => {
    expect(html).not.toContain('revision-hint');
  });
});

describe('rejected draft feedback (recorded response)', () => {
  const view = reportView(rawParse(DRAFT));
  const html = renderFeedback(view);

  it('shows the rejection banner', () => {
    expect(html).toContain('<div class="feedback-banner rejected">Reject and modify</div>');
  });

  it('repeats the rejection status line word for word', () => {
    expect(html).toContain(
      'Since Consistency Ratio is &gt; 0.1, Status: Rejected, revise the flagged comparisons',
    );
  });

  it('lists the hints in service order, worst first', () => {
    expect(view.hints.map((h) => `${h.row}/${h.col}`)).toEqual([
      'Alpha/Beta',
      'Beta/Gamma',
      'Alpha/Gamma',
    ]);
    const first = html.indexOf('Alpha / Beta');
    const second = html.indexOf('Beta / Gamma');
    const third = html.indexOf('Alpha / Gamma');
    expect(first).toBeGreaterThan(-1);
    expect(first).toBeLessThan(second);
    expect(second).toBeLessThan(third);
    // only the first (largest-deviation) hint carries the worst marker
    expect(html.match(/revision-hint worst/g)).toHaveLength(1);
    expect(html.indexOf('revision-hint worst')).toBeLessThan(second);
  });

  it('shows each deviation byte-identical to the wire', () => {
    const deviations = numberLexemes(DRAFT, 'deviation');
    expect(deviations).toEqual([
      '2.159484249353372',
      '2.159484249353372',
      '2.1564025828159643',
    ]);
    for (const deviation of deviations) {
      expect(html).toContain(`deviation ${deviation}`);
    }
  });

  it('flags inverted grades', () => {
    // the recorded third hint is Alpha/Gamma graded Extremely Important, inverted
    expect(html).toContain('Extremely Important (inverted)');
    expect(html).toContain('Equally Important');
  });

  it('shows the consistency ratio exactly as transmitted', () => {
    expect(numberLexeme(DRAFT, 'consistency_ratio')).toBe('5.839035432426237');
    expect(html).toContain('<dd>5.839035432426237</dd>');
  });
});

describe('verdict comes from the service, not from arithmetic', () => {
  it('trusts accepted=true even when the ratio text equals the threshold text', () => {
    // boundary calls belong to the service; the console must not compare
    const response = rawParse(
      JSON.stringify({
        decision_maker_id: 'DM1',
        context_id: 'criteria',
        status: 'complete',
        attempts: 1,
        report: {
          context_id: 'criteria',
          decision_maker_id: 'DM1',
          n: 3,
          lambda_max: 3.09,
          consistency_index: 0.045,
          random_index: 0.58,
          consistency_ratio: 0.1,
          gamma: 0.1,
          identification: 'IR.2',
          direction: 'DR.2-Accept',
          accepted: true,
          status: 'Since Consistency Ratio is <= 0.1, Status: Acceptable',
          advice: [],
        },
      }),
    );
    const html = renderFeedback(reportView(response));
    expect(html).toContain('feedback-banner accepted');
    expect(html).toContain('Acceptable');
  });

  it('trusts accepted=false regardless of the numbers shown', () => {
    const response = rawParse(
      JSON.stringify({
        decision_maker_id: 'DM1',
        context_id: 'criteria',
        status: 'draft',
        attempts: 2,
        report: {
          context_id: 'criteria',
          decision_maker_id: 'DM1',
          n: 3,
          lambda_max: 3.0,
          consistency_index: 0.0,
          random_index: 0.58,
          consistency_ratio: 0.0,
          gamma: 0.1,
          identification: 'IR.1',
          direction: 'DR.1-RejectAndModify',
          accepted: false,
          status: 'rejected by policy',
          advice: [],
        },
      }),
    );
    expect(renderFeedback(reportView(response))).toContain('feedback-banner rejected');
  });
});
