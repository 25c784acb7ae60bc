// The only configuration the UI takes: where the registry API lives.
// Priority: window.PTCATALOG_API_BASE (set by an optional config.js),
// then a locally stored override, then same-origin.

declare global {
  interface Window {
    PTCATALOG_API_BASE?: string
  }
}

const API_BASE_KEY = 'ptcatalog.apiBase'

export function apiBase(): string {
  if (typeof window.PTCATALOG_API_BASE === 'string') {
    return window.PTCATALOG_API_BASE.replace(/\/$/, '')
  }
  const stored = localStorage.getItem(API_BASE_KEY)
  if (stored) return stored.replace(/\/$/, '')
  return ''
}

export function storeApiBase(base: string) {
  localStorage.setItem(API_BASE_KEY, base)
}
