import { ApiClient } from './api.js';
import { SessionStore } from './state.js';
import { App } from './ui.js';

const DEFAULT_API = 'http://127.0.0.1:8080';

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get('api');
  return override ?? DEFAULT_API;
}

async function boot(): Promise<void> {
  const root = document.getElementById('app')!;
  const api = new ApiClient(apiBase());
  try {
    const model = await api.model();
    const store = new SessionStore(api, 150);
    new App(root, store, model).render();
    void store.assessNow();
  } catch (err) {
    root.innerHTML = '';
    const banner = document.createElement('div');
    banner.className = 'error-banner';
    banner.textContent =
      `could not load the fuzzy model from ${apiBase()}: ` +
      (err instanceof Error ? err.message : String(err));
    const retry = document.createElement('button');
    retry.textContent = 'retry';
    retry.addEventListener('click', () => void boot());
    root.appendChild(banner);
    root.appendChild(retry);
  }
}

void boot();
