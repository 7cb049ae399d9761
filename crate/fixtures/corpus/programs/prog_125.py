# fixture program 125
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
profile = {'name': 'Carol', 'age': 39, 'city': 'london'}
profile['age'] += 1
print(profile['name'])
num_iterations = 200
print('epochs', num_iterations)
num_iterations = 100
foreground = (111, 46, 162)
red_channel = foreground[0]
api_key = 'hPMEThNjOXV2M0oaFIF7'
masked = '*' * len(api_key)
website = 'https://jungle.com/island/704'
if website.startswith('https'):
    print('secure')
items = [('yellow', 13), ('stone', 89)]
for element in items:
    print(element[0])
end_index = 204
end_index = end_index + 1
print(sequence_items[end_index % 3])
end_index = 247
balance = decimal.Decimal('879.23')
print('balance', balance)
text = 'Garden stone market orange bridge harbor number'
text = text.strip()
for loop_round in range(4):
    num_steps = 100
    print(num_steps)
