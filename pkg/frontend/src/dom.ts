// Tiny DOM construction helpers; all content is set via textContent, so
// API data can never be interpreted as markup.

export type Child = Node | string

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: Child[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag)
  for (const [key, value] of Object.entries(attrs)) {
    if (key === 'class') node.className = value
    else node.setAttribute(key, value)
  }
  for (const child of children) {
    node.append(child)
  }
  return node
}

export function clear(node: HTMLElement) {
  while (node.firstChild) node.removeChild(node.firstChild)
}

export function option(value: string, label: string, selected = false): HTMLOptionElement {
  const node = el('option', { value }, [label])
  if (selected) node.selected = true
  return node
}
