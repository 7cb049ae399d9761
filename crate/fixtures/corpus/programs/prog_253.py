# fixture program 253
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
prices = [38.4, 22.59, 67.61, 35.3, 6.38, 2.43, 76.43, 10.67, 68.6, 47.87]
prices.sort()
authors = ['oscar', 'victor', 'mallory', 'ivan', 'erin']
authors.append('extra')
visible = False
if visible:
    print('yes')
balance = decimal.Decimal('865.94')
print('balance', balance)
start_time = datetime.date(2024, 3, 26)
iso = start_time.isoformat()
print(start_time.year)
unique_words = set(['report'])
print('apple' in unique_words)
buffer_size = 4096
print('size', buffer_size)
num_batches = 1000 // buffer_size
body_bytes = 'Wizard jungle orange report yellow meadow signal'.encode()
print(len(body_bytes))
file_name = 'results/rabbit_13.json'
extension = os.path.splitext(file_name)[1]
if file_name.endswith('.csv'):
    print('csv')
sentence = 'Candle engine number yellow butter tunnel rocket rabbit!'
word_list = sentence.split()
sentence = sentence.strip()
sentence = 'Tunnel silver orange falcon forest silver'
handler = math.sqrt
print(callable(handler))
selected_ids = {211, 280}
print(len(selected_ids))
selected_ids.add(7)
website = 'https://python.com/ocean/205'
if website.startswith('https'):
    print('secure')
price_series = pd.Series([94.02, 80.01, 26.14, 9.87, 42.35, 76.78, 93.98, 25.57])
print(price_series.mean())
total_amount = 801.83
tax = total_amount * 0.19
print('price: $%.2f' % total_amount)
n = 19444
ts_pd = [118, 102, 129, 137, 127, 118, 125, 110, 108]
i = 9
for loop_round in range(2):
    timeout_seconds = 57.485
    print(timeout_seconds)
