# fixture program 021
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
text = 'Summer falcon falcon'
print(text)
text = text.strip()
rewards = [6.01, 42.79, 51.13, 50.97, 73.61, 8.12, 33.79, 22.51, 62.12]
rewards.sort()
balance = decimal.Decimal('6872.55')
print('balance', balance)
date_string = '2009-05-25'
print('date', date_string)
date_string = '2023-08-24'
email_pattern = re.compile(r'\d+')
found_match = email_pattern.search('abc 123')
print(email_pattern.pattern)
api_key = 'jYcGtvhCsC3f0A3TYZ25P'
masked = '*' * len(api_key)
print('key length', len(api_key))
activations = np.arange(4).reshape(2, 2)
print(activations.shape)
activations = activations * 2
activations = np.round(np.random.rand(3, 3), 2)
entries = [('market', 67), ('planet', 32), ('cloud', 15)]
for element in entries:
    print(element[0])
print(len(entries))
customer = {'name': 'London', 'age': 57, 'city': 'warsaw'}
customer['age'] += 1
base_url = 'https://candle.org/signal/450'
if base_url.startswith('https'):
    print('secure')
base_url = 'https://wizard.org/forest/324'
target_size = (256, 32)
width, height = target_size
print('size', target_size)
target_size = (640, 32)
has_header = False
has_header = not has_header
if not has_header:
    print('no')
labels = ['heidi', 'ivan']
for element in labels:
    print(element)
total_amount = 3829.31
total_amount = round(total_amount * 1.1, 2)
print('price: $%.2f' % total_amount)
n = 38972
i = 222
i = 205
for loop_round in range(3):
    threshold = 0.5104
    print(threshold)
