/**
 * Project dashboard: stage timeline, judgment completion matrix,
 * technical ranking with the screening cutoff, and the financial
 * comparison with the award banner.
 *
 * Everything shown comes straight out of a project snapshot response.
 * Numbers keep the service's exact text, screened-out rows are found by
 * membership in the snapshot's screened-out list, and the award banner
 * repeats the winner the service named.
 */

import { escapeHtml } from './html.js';
import {
  RawValue,
  asArray,
  asBoolean,
  asNumberText,
  asObject,
  asString,
  field,
  optionalField,
} from './rawJson.js';

export const FORWARD_STATES = [
  'Setup',
  'Prescreening',
  'JudgmentCollection',
  'ConsistencyReview',
  'TechnicalRanking',
  'Screening',
  'FinancialEvaluation',
  'Awarded',
] as const;

export interface SubmissionCell {
  status: string;
  attempts: string;
  consistencyRatio: string | null;
  accepted: boolean | null;
}

export interface RankingRow {
  alternative: string;
  weight: string;
  rank: string;
}

export interface TechnicalView {
  decisionMakers: string[];
  alternativeWeights: Map<string, Map<string, string>>;
  finalWeights: Map<string, string>;
  ranking: RankingRow[];
  sigma: string;
  screenedOut: string[];
}

export interface FinancialRow {
  contractorId: string;
  bid: string;
  difference: string;
}

export interface FinancialView {
  estimate: string;
  rows: FinancialRow[];
  winner: string | null;
  tied: string[];
}

export interface ProjectView {
  projectId: string;
  title: string;
  state: string;
  gamma: string;
  estimate: string;
  decisionMakers: string[];
  registeredBidders: string[];
  prescreenQualified: string[] | null;
  prescreenDisqualified: string[] | null;
  judgments: Map<string, Map<string, SubmissionCell>>;
  technical: TechnicalView | null;
  financial: FinancialView | null;
}

function stringList(value: RawValue, label: string): string[] {
  return asArray(value, label).map((item) => asString(item, label));
}

function weightMap(value: RawValue, label: string): Map<string, string> {
  const out = new Map<string, string>();
  for (const [name, weight] of Object.entries(asObject(value, label))) {
    out.set(name, asNumberText(weight, `${label}.${name}`));
  }
  return out;
}

function technicalView(value: RawValue): TechnicalView {
  const perDm = new Map<string, Map<string, string>>();
  for (const [dm, weights] of Object.entries(
    asObject(field(value, 'alternative_weights'), 'alternative_weights'),
  )) {
    perDm.set(dm, weightMap(weights, `alternative_weights.${dm}`));
  }
  return {
    decisionMakers: stringList(field(value, 'decision_makers'), 'decision_makers'),
    alternativeWeights: perDm,
    finalWeights: weightMap(field(value, 'final_weights'), 'final_weights'),
    ranking: asArray(field(value, 'ranking'), 'ranking').map((row) => ({
      alternative: asString(field(row, 'alternative')),
      weight: asNumberText(field(row, 'weight'), 'weight'),
      rank: asNumberText(field(row, 'rank'), 'rank'),
    })),
    sigma: asNumberText(field(value, 'sigma'), 'sigma'),
    screenedOut: stringList(field(value, 'screened_out'), 'screened_out'),
  };
}

function financialView(value: RawValue): FinancialView {
  const winnerField = field(value, 'winner');
  return {
    estimate: asString(field(value, 'estimate')),
    rows: asArray(field(value, 'rows'), 'rows').map((row) => ({
      contractorId: asString(field(row, 'contractor_id')),
      bid: asString(field(row, 'bid')),
      difference: asString(field(row, 'difference')),
    })),
    winner: winnerField === null ? null : asString(winnerField, 'winner'),
    tied: stringList(field(value, 'tied'), 'tied'),
  };
}

function submissionCell(value: RawValue): SubmissionCell {
  const ratio = optionalField(value, 'consistency_ratio');
  const accepted = optionalField(value, 'accepted');
  return {
    status: asString(field(value, 'status')),
    attempts: asNumberText(field(value, 'attempts'), 'attempts'),
    consistencyRatio:
      ratio === undefined || ratio === null ? null : asNumberText(ratio, 'consistency_ratio'),
    accepted: accepted === undefined || accepted === null ? null : asBoolean(accepted, 'accepted'),
  };
}

/** Pulls the display strings out of a project snapshot response. */
export function projectView(snapshot: RawValue): ProjectView {
  const hierarchy = field(snapshot, 'hierarchy');
  const judgments = new Map<string, Map<string, SubmissionCell>>();
  for (const [dm, contexts] of Object.entries(
    asObject(field(snapshot, 'judgments'), 'judgments'),
  )) {
    const perContext = new Map<string, SubmissionCell>();
    for (const [contextId, cell] of Object.entries(asObject(contexts, dm))) {
      perContext.set(contextId, submissionCell(cell));
    }
    judgments.set(dm, perContext);
  }
  const prescreen = optionalField(snapshot, 'prescreen');
  const technical = optionalField(snapshot, 'technical');
  const financial = optionalField(snapshot, 'financial');
  return {
    projectId: asString(field(snapshot, 'project_id')),
    title: asString(field(snapshot, 'title')),
    state: asString(field(snapshot, 'state')),
    gamma: asNumberText(field(snapshot, 'gamma'), 'gamma'),
    estimate: asString(field(snapshot, 'estimate')),
    decisionMakers: stringList(field(hierarchy, 'decision_makers'), 'decision_makers'),
    registeredBidders: stringList(field(snapshot, 'registered_bidders'), 'registered_bidders'),
    prescreenQualified:
      prescreen === undefined || prescreen === null
        ? null
        : stringList(field(prescreen, 'qualified'), 'qualified'),
    prescreenDisqualified:
      prescreen === undefined || prescreen === null
        ? null
        : stringList(field(prescreen, 'disqualified'), 'disqualified'),
    judgments,
    technical: technical === undefined || technical === null ? null : technicalView(technical),
    financial: financial === undefined || financial === null ? null : financialView(financial),
  };
}

export function renderTimeline(state: string): string {
  const reached = FORWARD_STATES.indexOf(state as (typeof FORWARD_STATES)[number]);
  const cancelled = state === 'Cancelled';
  const items = FORWARD_STATES.map((stage, index) => {
    let cls = 'pending';
    if (!cancelled && reached >= 0) {
      if (index < reached) cls = 'done';
      else if (index === reached) cls = 'current';
    }
    return `    <li class="stage ${cls}">${escapeHtml(stage)}</li>`;
  });
  const note = cancelled ? '\n  <p class="cancelled-note">This project was cancelled.</p>' : '';
  return `<ol class="stage-timeline">\n${items.join('\n')}\n  </ol>${note}`;
}

/**
 * One row per judgment context, one column per expert. Contexts the
 * service has no submission for yet show as pending.
 */
export function renderCompletionMatrix(view: ProjectView, contextIds: string[]): string {
  const header = view.decisionMakers
    .map((dm) => `<th>${escapeHtml(dm)}</th>`)
    .join('');
  const rows = contextIds.map((contextId) => {
    const cells = view.decisionMakers.map((dm) => {
      const cell = view.judgments.get(dm)?.get(contextId);
      if (cell === undefined) {
        return '<td class="submission pending">pending</td>';
      }
      const cls = cell.status === 'complete' ? 'complete' : 'draft';
      const ratio =
        cell.consistencyRatio === null
          ? ''
          : ` <span class="cell-ratio">CR ${escapeHtml(cell.consistencyRatio)}</span>`;
      return `<td class="submission ${cls}">${escapeHtml(cell.status)} (attempt ${escapeHtml(cell.attempts)})${ratio}</td>`;
    });
    return `      <tr><th class="context-name">${escapeHtml(contextId)}</th>${cells.join('')}</tr>`;
  });
  return `<table class="completion-matrix">
    <thead><tr><th>Context</th>${header}</tr></thead>
    <tbody>
${rows.join('\n')}
    </tbody>
  </table>`;
}

export function renderRanking(technical: TechnicalView): string {
  const screened = new Set(technical.screenedOut);
  const dmHeaders = technical.decisionMakers
    .map((dm) => `<th>${escapeHtml(dm)}</th>`)
    .join('');
  const rows = technical.ranking.map((row) => {
    const cls = screened.has(row.alternative) ? ' class="screened-out"' : '';
    const dmCells = technical.decisionMakers.map((dm) => {
      const weight = technical.alternativeWeights.get(dm)?.get(row.alternative);
      return `<td>${weight === undefined ? '&mdash;' : escapeHtml(weight)}</td>`;
    });
    const status = screened.has(row.alternative) ? 'screened out' : 'qualified';
    return `      <tr${cls}><td>${escapeHtml(row.rank)}</td><td>${escapeHtml(row.alternative)}</td>${dmCells.join('')}<td>${escapeHtml(row.weight)}</td><td>${status}</td></tr>`;
  });
  return `<table class="ranking-table">
    <thead><tr><th>Rank</th><th>Alternative</th>${dmHeaders}<th>Final weight</th><th>Screening</th></tr></thead>
    <tbody>
${rows.join('\n')}
    </tbody>
  </table>
  <p class="sigma-cutoff">Screening cutoff &sigma; = ${escapeHtml(technical.sigma)}</p>`;
}

export function renderFinancial(financial: FinancialView, estimate: string): string {
  const rows = financial.rows.map(
    (row) =>
      `      <tr><td>${escapeHtml(row.contractorId)}</td><td class="amount">${escapeHtml(row.bid)}</td><td class="amount">${escapeHtml(row.difference)}</td></tr>`,
  );
  const banner =
    financial.winner === null
      ? ''
      : `\n  <div class="award-banner">Contract awarded to ${escapeHtml(financial.winner)}</div>`;
  const tied =
    financial.tied.length === 0
      ? ''
      : `\n  <p class="tied-note">Tied lowest offers: ${financial.tied.map(escapeHtml).join(', ')}</p>`;
  return `<p class="estimate-line">Estimated cost: <span class="amount">${escapeHtml(estimate)}</span></p>
  <table class="financial-table">
    <thead><tr><th>Contractor</th><th>Bid</th><th>Difference from estimate</th></tr></thead>
    <tbody>
${rows.join('\n')}
    </tbody>
  </table>${tied}${banner}`;
}

export function renderDashboard(view: ProjectView, contextIds: string[]): string {
  const sections = [
    `<header class="project-header">
    <h2>${escapeHtml(view.title)}</h2>
    <p class="project-meta">State: <strong>${escapeHtml(view.state)}</strong> &middot; consistency threshold ${escapeHtml(view.gamma)}</p>
  </header>`,
    renderTimeline(view.state),
  ];
  if (view.prescreenQualified !== null) {
    const qualified = view.prescreenQualified.map(escapeHtml).join(', ') || 'none';
    const disqualified = (view.prescreenDisqualified ?? []).map(escapeHtml).join(', ') || 'none';
    sections.push(`<section class="prescreen">
    <h3>Prescreening</h3>
    <p>Qualified: ${qualified}</p>
    <p>Disqualified: ${disqualified}</p>
  </section>`);
  }
  sections.push(`<section class="collection">
    <h3>Judgment collection</h3>
    ${renderCompletionMatrix(view, contextIds)}
  </section>`);
  if (view.technical !== null) {
    sections.push(`<section class="technical">
    <h3>Technical ranking</h3>
    ${renderRanking(view.technical)}
  </section>`);
  }
  if (view.financial !== null) {
    sections.push(`<section class="financial">
    <h3>Financial evaluation</h3>
    ${renderFinancial(view.financial, view.financial.estimate)}
  </section>`);
  }
  return `<div class="dashboard" data-project-id="${escapeHtml(view.projectId)}">
  ${sections.join('\n  ')}
</div>`;
}
