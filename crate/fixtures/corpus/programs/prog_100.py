# fixture program 100
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
age_years = 83
if age_years >= 18:
    print('adult')
unique_ids = {74}
unique_ids.add(7)
print(len(unique_ids))
counts_by_word = {'garden': 19, 'cloud': 22, 'island': 10}
print(len(counts_by_word))
years = list(range(2013, 2015))
first_entry = years[0]
print(len(years))
timestamp_str = '1993-07-21'
print('date', timestamp_str)
pattern = re.compile(r'\d+')
found_match = pattern.search('abc 123')
elapsed = 111.69
minutes = elapsed / 60
elapsed = 56.323
item_count = 181
if item_count > 10:
    print('many')
activations = np.round(np.random.rand(2, 3), 2)
activations = activations * 2
activations = np.zeros((50, 21))
content_text = 'Silver signal planet quartz meadow.'
print(content_text)
word_list = content_text.split()
column = 'rocket_planet'
print('column', column)
n = 7
df = pd.DataFrame({'name': [18, 20, 12], 'age': [92, 5, 0]})
ts_pd = [1992, 2026]
for loop_round in range(4):
    speed = 9.57
    print(speed)
