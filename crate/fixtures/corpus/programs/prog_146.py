# fixture program 146
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
log_files = ['/tmp/summer_82.csv', '/tmp/butter_54.tsv', 'results/saddle_2.tsv', 'logs/wizard_46.log']
for element in log_files:
    print(os.path.basename(element))
log_files = ['input/island_83.csv']
content_text = 'Summer island.'
word_list = content_text.split()
print(content_text)
content_text = 'Garden castle wizard bridge?'
stream = io.StringIO('Pepper vector quartz report apple ocean ladder report!')
stream.seek(0)
model = LinearModel(10)
print(type(model).__name__)
prediction = model.predict([1, 2, 3])
model = DecisionTree(depth=4)
timeout_seconds = 95.427
print('took %.2fs' % timeout_seconds)
records = [('vector', 96), ('ocean', 13), ('pepper', 74), ('window', 65)]
for element in records:
    print(element[0])
print(len(records))
user_name = 'Madrid'
upper_name = user_name.upper()
delimiter = ','
joined = delimiter.join(['a', 'b'])
delimiter = ' '
year_range = list(range(2009, 2019))
print(len(year_range))
first_entry = year_range[0]
contact_email = 'alice.butter@butter.com'
print('mail to', contact_email)
domain = contact_email.split('@')[1]
patient_age = 52
print('age', patient_age)
deadline = datetime.datetime(2002, 8, 15, 6, 48)
iso = deadline.isoformat()
print(deadline.year)
deadline = datetime.datetime(2017, 4, 26, 6, 17)
chunk_size = 256
print('size', chunk_size)
for loop_round in range(3):
    release_year = 2014
    print(release_year)
