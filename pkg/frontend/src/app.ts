/**
 * Browser entry point. This is the only module that touches the DOM;
 * rendering itself lives in the pure view modules so it can be tested
 * without a browser.
 */

import { ConsoleClient, ServiceError } from './api.js';
import { projectView, renderDashboard } from './dashboard.js';
import { renderFeedback, reportView } from './feedback.js';
import { escapeHtml } from './html.js';
import { Poller, startPolling } from './poll.js';
import { asArray, asString, field } from './rawJson.js';
import {
  ComparisonFormState,
  ContextInfo,
  canSubmit,
  contextList,
  newFormState,
  renderWizard,
  selectGrade,
  submissionEntries,
  toggleInverted,
} from './wizard.js';

const REFRESH_MS = 3000;

interface Session {
  client: ConsoleClient;
  decisionMakerId: string;
}

let session: Session | null = null;
let poller: Poller | null = null;
let contexts: ContextInfo[] = [];
let formState: ComparisonFormState | null = null;
let currentProjectId: string | null = null;

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing #${id}`);
  return node;
}

function describeError(error: unknown): string {
  if (error instanceof ServiceError) {
    const missing =
      error.missing.length === 0
        ? ''
        : ` (missing: ${error.missing
            .map((m) => `${m.decision_maker_id}/${m.context_id}`)
            .join(', ')})`;
    return `${error.kind}: ${error.message}${missing}`;
  }
  return error instanceof Error ? error.message : String(error);
}

function showError(message: string): void {
  const box = el('error-box');
  box.textContent = message;
  box.hidden = message === '';
}

async function refreshDashboard(): Promise<void> {
  if (session === null || currentProjectId === null) return;
  const snapshot = await session.client.project(currentProjectId);
  el('dashboard').innerHTML = renderDashboard(
    projectView(snapshot),
    contexts.map((ctx) => ctx.contextId),
  );
}

function renderContextPicker(): void {
  const picker = el('context-picker') as HTMLSelectElement;
  picker.innerHTML = [
    '<option value="">— pick a context to grade —</option>',
    ...contexts.map(
      (ctx) =>
        `<option value="${escapeHtml(ctx.contextId)}">${escapeHtml(ctx.contextId)} (${ctx.labels.length} elements)</option>`,
    ),
  ].join('');
}

function redrawWizard(): void {
  el('wizard').innerHTML = formState === null ? '' : renderWizard(formState);
}

async function submitCurrentForm(): Promise<void> {
  if (session === null || currentProjectId === null || formState === null) return;
  if (!canSubmit(formState)) return;
  const response = await session.client.submitJudgment(
    currentProjectId,
    session.decisionMakerId,
    formState.contextId,
    submissionEntries(formState),
  );
  el('feedback').innerHTML = renderFeedback(reportView(response));
  await refreshDashboard();
}

async function openProject(projectId: string): Promise<void> {
  if (session === null) return;
  currentProjectId = projectId;
  contexts = contextList(await session.client.contexts(projectId));
  renderContextPicker();
  formState = null;
  redrawWizard();
  el('feedback').innerHTML = '';
  await refreshDashboard();
  poller?.stop();
  poller = startPolling(refreshDashboard, REFRESH_MS, (error) =>
    showError(describeError(error)),
  );
  el('workspace').hidden = false;
}

async function listProjects(): Promise<void> {
  if (session === null) return;
  const listing = await session.client.projects();
  const rows = asArray(listing, 'projects').map((entry) => {
    const id = asString(field(entry, 'project_id'));
    const title = asString(field(entry, 'title'));
    const state = asString(field(entry, 'state'));
    return `<li><button type="button" class="open-project" data-project-id="${escapeHtml(id)}">${escapeHtml(title)}</button> <span class="project-state">${escapeHtml(state)}</span></li>`;
  });
  el('project-list').innerHTML =
    rows.length === 0 ? '<li>No projects yet.</li>' : rows.join('');
}

async function connect(): Promise<void> {
  const baseUrl = (el('service-url') as HTMLInputElement).value.trim();
  const token = (el('service-token') as HTMLInputElement).value.trim();
  const dm = (el('expert-id') as HTMLInputElement).value.trim();
  const client = new ConsoleClient({ baseUrl, token });
  await client.health();
  session = { client, decisionMakerId: dm };
  el('projects-panel').hidden = false;
  await listProjects();
}

function wire(): void {
  el('connect-form').addEventListener('submit', (event) => {
    event.preventDefault();
    connect().catch((error) => showError(describeError(error)));
  });

  el('project-list').addEventListener('click', (event) => {
    const button = (event.target as HTMLElement).closest<HTMLElement>('.open-project');
    if (button === null) return;
    const projectId = button.dataset['projectId'];
    if (projectId === undefined) return;
    showError('');
    openProject(projectId).catch((error) => showError(describeError(error)));
  });

  el('context-picker').addEventListener('change', (event) => {
    const picker = event.target as HTMLSelectElement;
    const context = contexts.find((ctx) => ctx.contextId === picker.value);
    formState = context === undefined ? null : newFormState(context);
    el('feedback').innerHTML = '';
    redrawWizard();
  });

  el('wizard').addEventListener('change', (event) => {
    if (formState === null) return;
    const target = event.target as HTMLElement;
    const indexText = target.dataset['pairIndex'];
    if (indexText === undefined) return;
    const index = Number(indexText);
    if (target instanceof HTMLSelectElement) {
      formState = selectGrade(formState, index, target.value === '' ? null : target.value);
    } else if (target instanceof HTMLInputElement && target.type === 'checkbox') {
      formState = toggleInverted(formState, index, target.checked);
    }
    redrawWizard();
  });

  el('wizard').addEventListener('submit', (event) => {
    event.preventDefault();
    showError('');
    submitCurrentForm().catch((error) => showError(describeError(error)));
  });
}

document.addEventListener('DOMContentLoaded', wire);
